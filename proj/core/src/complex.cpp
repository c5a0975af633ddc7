#include "foldcob/complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace foldcob::algebra {

std::string Generator::label() const {
  switch (parity) {
    case Parity::Odd: return name + "o";
    case Parity::Even: return name + "e";
    case Parity::None: break;
  }
  return name;
}

IntMatrix MixedComplex::outgoing(std::size_t deg) const {
  const std::size_t n = size(deg);
  if (direction == Direction::Homological) {
    if (deg >= 1 && deg - 1 < diffs.size()) return diffs[deg - 1];
  } else if (deg < diffs.size()) {
    return diffs[deg];
  }
  return IntMatrix(0, n);
}

IntMatrix MixedComplex::incoming(std::size_t deg) const {
  const std::size_t n = size(deg);
  if (direction == Direction::Homological) {
    if (deg < diffs.size()) return diffs[deg];
  } else if (deg >= 1 && deg - 1 < diffs.size()) {
    return diffs[deg - 1];
  }
  return IntMatrix(n, 0);
}

long MixedComplex::outgoing_target(std::size_t deg) const {
  if (direction == Direction::Homological) return static_cast<long>(deg) - 1;
  return deg + 1 < num_degrees() ? static_cast<long>(deg + 1) : -1;
}

std::size_t MixedComplex::index_of(std::size_t deg, const std::string& label) const {
  if (deg >= generators.size()) throw std::out_of_range("degree " + std::to_string(deg) + " out of range");
  const auto& gens = generators[deg];
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].label() == label) return i;
  throw std::out_of_range("no generator " + label + " in degree " + std::to_string(deg) + " of " + id);
}

IntVector MixedComplex::vector(std::size_t deg, std::initializer_list<std::pair<const char*, long>> terms) const {
  IntVector v(size(deg), Integer(0));
  for (const auto& [label, coeff] : terms) v[index_of(deg, label)] += coeff;
  return v;
}

bool same_complex(const MixedComplex& a, const MixedComplex& b) {
  return a.direction == b.direction && a.generators == b.generators && a.diffs == b.diffs;
}

namespace {

std::string describe(const MixedComplex& cx, std::size_t deg, std::size_t idx) {
  return cx.generators[deg][idx].label() + " (degree " + std::to_string(deg) + ", index " + std::to_string(idx) + ")";
}

}  // namespace

ViolationList validate_complex(const MixedComplex& cx) {
  ViolationList out;
  const std::size_t n = cx.num_degrees();
  const std::size_t expected = n == 0 ? 0 : n - 1;
  if (cx.diffs.size() != expected) {
    out.push_back({"differential count", "expected " + std::to_string(expected) + " differentials, found " +
                                             std::to_string(cx.diffs.size())});
    return out;
  }
  const bool hom = cx.direction == Direction::Homological;
  auto src_deg = [&](std::size_t k) { return hom ? k + 1 : k; };
  auto dst_deg = [&](std::size_t k) { return hom ? k : k + 1; };

  bool shapes_ok = true;
  for (std::size_t k = 0; k < cx.diffs.size(); ++k) {
    const IntMatrix& d = cx.diffs[k];
    if (d.rows() != cx.size(dst_deg(k)) || d.cols() != cx.size(src_deg(k))) {
      std::ostringstream os;
      os << "differential " << k << " has shape " << d.rows() << "x" << d.cols() << ", expected "
         << cx.size(dst_deg(k)) << "x" << cx.size(src_deg(k));
      out.push_back({"shape", os.str()});
      shapes_ok = false;
    }
  }
  if (!shapes_ok) return out;

  for (std::size_t k = 0; k < cx.diffs.size(); ++k) {
    const IntMatrix& d = cx.diffs[k];
    const auto& srcs = cx.generators[src_deg(k)];
    const auto& dsts = cx.generators[dst_deg(k)];
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        if (d(i, j) != 0 && srcs[j].ring == Ring::TwoTorsion && dsts[i].ring == Ring::Free)
          out.push_back({"two-torsion source maps to free target",
                         describe(cx, src_deg(k), j) + " -> " + describe(cx, dst_deg(k), i)});
  }

  for (std::size_t k = 0; k + 1 < cx.diffs.size(); ++k) {
    // hom: diffs[k] * diffs[k+1] : C_{k+2} -> C_k ; cohom: diffs[k+1] * diffs[k] : C^k -> C^{k+2}
    const IntMatrix comp = hom ? cx.diffs[k] * cx.diffs[k + 1] : cx.diffs[k + 1] * cx.diffs[k];
    const std::size_t from = hom ? k + 2 : k;
    const std::size_t to = hom ? k : k + 2;
    for (std::size_t i = 0; i < comp.rows(); ++i)
      for (std::size_t j = 0; j < comp.cols(); ++j) {
        const Integer& x = comp(i, j);
        const bool bad = cx.generators[to][i].ring == Ring::Free ? x != 0 : mpz_odd_p(x.get_mpz_t()) != 0;
        if (bad)
          out.push_back({"d∘d nonzero", "at degree " + std::to_string(from) + ": " + describe(cx, from, j) +
                                            " reaches " + describe(cx, to, i) + " with coefficient " +
                                            x.get_str()});
      }
  }
  return out;
}

IntMatrix torsion_relations(const MixedComplex& cx, std::size_t deg) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < cx.size(deg); ++i)
    if (cx.generators[deg][i].ring == Ring::TwoTorsion) idx.push_back(i);
  IntMatrix r(cx.size(deg), idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) r(idx[c], c) = 2;
  return r;
}

bool vanishes_in_group(const MixedComplex& cx, std::size_t deg, std::span<const Integer> v) {
  if (v.size() != cx.size(deg)) throw std::invalid_argument("vector length does not match degree size");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (cx.generators[deg][i].ring == Ring::Free ? v[i] != 0 : mpz_odd_p(v[i].get_mpz_t()) != 0) return false;
  }
  return true;
}

MixedComplex hom_dual(const MixedComplex& cx, Coefficients g) {
  if (cx.direction != Direction::Homological) throw std::invalid_argument("hom_dual expects a homological complex");
  MixedComplex out;
  out.id = "Hom(" + cx.id + "," + to_string(g) + ")";
  out.direction = Direction::Cohomological;
  std::vector<std::vector<std::size_t>> kept(cx.num_degrees());
  for (std::size_t k = 0; k < cx.num_degrees(); ++k) {
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < cx.size(k); ++i) {
      const Generator& gen = cx.generators[k][i];
      if (g == Coefficients::Z && gen.ring == Ring::TwoTorsion) continue;
      kept[k].push_back(i);
      gens.push_back({gen.name, gen.parity, g == Coefficients::Z ? Ring::Free : Ring::TwoTorsion});
    }
    out.generators.push_back(std::move(gens));
  }
  for (std::size_t k = 0; k < cx.diffs.size(); ++k) {
    IntMatrix d = cx.diffs[k].select(kept[k], kept[k + 1]).transpose();
    out.diffs.push_back(g == Coefficients::Z2 ? d.mod2() : std::move(d));
  }
  return out;
}

MixedComplex drop_generators(const MixedComplex& cx, const std::vector<std::string>& labels) {
  MixedComplex out;
  out.id = cx.id;
  out.direction = cx.direction;
  std::vector<std::vector<std::size_t>> kept(cx.num_degrees());
  for (std::size_t k = 0; k < cx.num_degrees(); ++k) {
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < cx.size(k); ++i) {
      const Generator& gen = cx.generators[k][i];
      if (std::find(labels.begin(), labels.end(), gen.label()) != labels.end()) continue;
      kept[k].push_back(i);
      gens.push_back(gen);
    }
    out.generators.push_back(std::move(gens));
  }
  const bool hom = cx.direction == Direction::Homological;
  for (std::size_t k = 0; k < cx.diffs.size(); ++k)
    out.diffs.push_back(hom ? cx.diffs[k].select(kept[k], kept[k + 1]) : cx.diffs[k].select(kept[k + 1], kept[k]));
  return out;
}

MixedComplex free_part(const MixedComplex& cx) {
  std::vector<std::string> torsion;
  for (const auto& gens : cx.generators)
    for (const auto& g : gens)
      if (g.ring == Ring::TwoTorsion) torsion.push_back(g.label());
  return drop_generators(cx, torsion);
}

ViolationList validate_chain_map(const ChainMap& f) {
  ViolationList out;
  const MixedComplex& s = f.source;
  const MixedComplex& t = f.target;
  // A source may stop below the target's top degree; the missing groups are zero.
  if (s.direction != t.direction || s.num_degrees() > t.num_degrees()) {
    out.push_back({"chain map shape", "source and target differ in direction or degree range"});
    return out;
  }
  if (f.maps.size() != s.num_degrees()) {
    out.push_back({"chain map shape", "expected one matrix per source degree"});
    return out;
  }
  for (std::size_t k = 0; k < f.maps.size(); ++k)
    if (f.maps[k].rows() != t.size(k) || f.maps[k].cols() != s.size(k)) {
      out.push_back({"chain map shape", "matrix for degree " + std::to_string(k) + " has the wrong shape"});
      return out;
    }
  for (std::size_t k = 0; k < f.maps.size(); ++k) {
    const IntMatrix& m = f.maps[k];
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j) != 0 && s.generators[k][j].ring == Ring::TwoTorsion && t.generators[k][i].ring == Ring::Free)
          out.push_back({"two-torsion source maps to free target",
                         "chain map in degree " + std::to_string(k) + ": " + s.generators[k][j].label() + " -> " +
                             t.generators[k][i].label()});
    const long next = t.outgoing_target(k);
    if (next < 0) continue;
    const auto nk = static_cast<std::size_t>(next);
    const IntMatrix lhs = t.outgoing(k) * m;
    const IntMatrix rhs = nk < f.maps.size() ? f.maps[nk] * s.outgoing(k) : IntMatrix(t.size(nk), s.size(k));
    const IntMatrix diff = lhs - rhs;
    for (std::size_t j = 0; j < diff.cols(); ++j)
      if (!vanishes_in_group(t, nk, diff.column(j)))
        out.push_back({"chain map condition", "fails on " + s.generators[k][j].label() + " in degree " +
                                                  std::to_string(k)});
  }
  return out;
}

ChainMap identity_on_labels(const MixedComplex& source, const MixedComplex& target) {
  ChainMap f{source, target, {}};
  for (std::size_t k = 0; k < source.num_degrees(); ++k) {
    IntMatrix m(target.size(k), source.size(k));
    for (std::size_t j = 0; j < source.size(k); ++j)
      for (std::size_t i = 0; i < target.size(k); ++i)
        if (target.generators[k][i].label() == source.generators[k][j].label()) m(i, j) = 1;
    f.maps.push_back(std::move(m));
  }
  return f;
}

std::string to_string(Direction d) { return d == Direction::Homological ? "homological" : "cohomological"; }
std::string to_string(Ring r) { return r == Ring::Free ? "FREE" : "TWO_TORSION"; }
std::string to_string(Parity p) {
  switch (p) {
    case Parity::Odd: return "o";
    case Parity::Even: return "e";
    case Parity::None: break;
  }
  return "none";
}
std::string to_string(Coefficients g) { return g == Coefficients::Z ? "Z" : "Z2"; }

}  // namespace foldcob::algebra
