#include "foldcob/homology.hpp"

#include <sstream>
#include <stdexcept>

namespace foldcob::algebra {

std::string AbelianGroupPresentation::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (free_rank > 0) {
    sep();
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
  }
  for (const auto& d : torsion) {
    sep();
    os << "Z/" << d.get_str();
  }
  if (first) os << "0";
  return os.str();
}

Homology::Homology(const MixedComplex& cx, std::size_t deg) : cx_(cx), deg_(deg) {
  if (deg >= cx.num_degrees())
    throw std::out_of_range("degree " + std::to_string(deg) + " outside the complex " + cx.id);
  const std::size_t n = cx.size(deg);
  const long t = cx.outgoing_target(deg);

  IntMatrix out = cx.outgoing(deg);
  IntMatrix stacked = t >= 0 ? out.hcat(torsion_relations(cx, static_cast<std::size_t>(t))) : out;
  IntMatrix kernel = kernel_basis(stacked);
  std::vector<std::size_t> top(n);
  for (std::size_t i = 0; i < n; ++i) top[i] = i;
  std::vector<std::size_t> all_cols(kernel.cols());
  for (std::size_t j = 0; j < kernel.cols(); ++j) all_cols[j] = j;
  cycles_ = kernel.select(top, all_cols);
  cycle_solver_.emplace(cycles_);

  IntMatrix bounds = cx.incoming(deg).hcat(torsion_relations(cx, deg));
  IntMatrix rel(cycles_.cols(), bounds.cols());
  for (std::size_t j = 0; j < bounds.cols(); ++j) {
    auto y = cycle_solver_->solve(bounds.column(j));
    if (!y) throw std::logic_error("boundary is not a cycle in " + cx.id + "; validate the complex first");
    rel.set_column(j, *y);
  }
  SmithForm snf = smith_normal_form(rel);
  u2_ = snf.u;
  const IntMatrix generators = cycles_ * snf.u_inv;
  for (std::size_t i = 0; i < cycles_.cols(); ++i) {
    if (i >= snf.rank) {
      free_rows_.push_back(i);
    } else if (snf.s(i, i) >= 2) {
      torsion_rows_.push_back(i);
    }
  }
  group_.free_rank = free_rows_.size();
  for (std::size_t i : free_rows_) group_.basis_cycles.push_back(generators.column(i));
  for (std::size_t i : torsion_rows_) {
    group_.torsion.push_back(snf.s(i, i));
    group_.basis_cycles.push_back(generators.column(i));
  }
}

bool Homology::is_cycle(std::span<const Integer> v) const {
  if (v.size() != cx_.size(deg_)) return false;
  const long t = cx_.outgoing_target(deg_);
  if (t < 0) return true;
  IntVector image = cx_.outgoing(deg_) * v;
  return vanishes_in_group(cx_, static_cast<std::size_t>(t), image);
}

IntVector Homology::express(std::span<const Integer> cycle) const {
  if (!is_cycle(cycle)) throw std::invalid_argument("vector is not a cycle in degree " + std::to_string(deg_));
  auto y = cycle_solver_->solve(cycle);
  if (!y) throw std::logic_error("cycle lattice does not contain a cycle");
  IntVector w = u2_ * std::span<const Integer>(*y);
  IntVector coords;
  coords.reserve(group_.num_generators());
  for (std::size_t i : free_rows_) coords.push_back(w[i]);
  for (std::size_t k = 0; k < torsion_rows_.size(); ++k) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), w[torsion_rows_[k]].get_mpz_t(), group_.torsion[k].get_mpz_t());
    coords.push_back(r);
  }
  return coords;
}

AbelianGroupPresentation homology(const MixedComplex& cx, std::size_t deg) { return Homology(cx, deg).group(); }

IntVector express_class(const MixedComplex& cx, std::size_t deg, std::span<const Integer> cycle) {
  return Homology(cx, deg).express(cycle);
}

MixedComplex reduce_mod2(const MixedComplex& cx) {
  MixedComplex out = cx;
  out.id = cx.id + "⊗Z2";
  for (auto& gens : out.generators)
    for (auto& g : gens) g.ring = Ring::TwoTorsion;
  for (auto& d : out.diffs) d = d.mod2();
  return out;
}

namespace {

IntMatrix relation_matrix(const AbelianGroupPresentation& g) {
  IntMatrix r(g.num_generators(), g.torsion.size());
  for (std::size_t k = 0; k < g.torsion.size(); ++k) r(g.free_rank + k, k) = g.torsion[k];
  return r;
}

std::vector<std::size_t> kept_indices(const MixedComplex& cx, std::size_t deg, Coefficients g) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < cx.size(deg); ++i)
    if (g == Coefficients::Z2 || cx.generators[deg][i].ring == Ring::Free) idx.push_back(i);
  return idx;
}

}  // namespace

GroupMapReport analyze_group_map(const IntMatrix& m, const AbelianGroupPresentation& domain,
                                 const AbelianGroupPresentation& codomain) {
  const std::size_t na = domain.num_generators();
  const std::size_t nb = codomain.num_generators();
  if (m.rows() != nb || m.cols() != na) throw std::invalid_argument("analyze_group_map: shape mismatch");
  GroupMapReport rep;

  const IntMatrix stacked = m.hcat(relation_matrix(codomain));
  SmithForm snf = smith_normal_form(stacked);
  rep.surjective = snf.rank == nb;
  for (std::size_t i = 0; i < snf.rank && rep.surjective; ++i)
    if (snf.s(i, i) != 1) rep.surjective = false;

  IntMatrix kernel = kernel_basis(stacked);
  std::vector<std::size_t> top(na), cols(kernel.cols());
  for (std::size_t i = 0; i < na; ++i) top[i] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  const IntMatrix k = kernel.select(top, cols);

  rep.injective = true;
  for (std::size_t j = 0; j < k.cols() && rep.injective; ++j)
    for (std::size_t i = 0; i < na; ++i) {
      if (i < domain.free_rank) {
        if (k(i, j) != 0) rep.injective = false;
      } else if (!mpz_divisible_p(k(i, j).get_mpz_t(), domain.torsion[i - domain.free_rank].get_mpz_t())) {
        rep.injective = false;
      }
      if (!rep.injective) break;
    }
  rep.isomorphism = rep.injective && rep.surjective;

  SmithForm img = smith_normal_form(k.hcat(relation_matrix(domain)));
  rep.image.free_rank = na - img.rank;
  for (std::size_t i = 0; i < img.rank; ++i)
    if (img.s(i, i) >= 2) rep.image.torsion.push_back(img.s(i, i));
  return rep;
}

InducedMap induced_map(const ChainMap& f, std::size_t deg, Side side, Coefficients g) {
  if (auto v = validate_chain_map(f); !v.empty()) throw std::invalid_argument("not a chain map: " + v.front().message);

  MixedComplex from, to;
  IntMatrix cochain;
  if (side == Side::Homology) {
    from = g == Coefficients::Z ? f.source : reduce_mod2(f.source);
    to = g == Coefficients::Z ? f.target : reduce_mod2(f.target);
    cochain = g == Coefficients::Z ? f.maps.at(deg) : f.maps.at(deg).mod2();
  } else {
    from = hom_dual(f.target, g);
    to = hom_dual(f.source, g);
    const auto rows = kept_indices(f.target, deg, g);
    const auto cols = kept_indices(f.source, deg, g);
    cochain = f.maps.at(deg).select(rows, cols).transpose();
    if (g == Coefficients::Z2) cochain = cochain.mod2();
  }

  Homology h_from(from, deg);
  Homology h_to(to, deg);
  InducedMap out;
  out.domain = h_from.group();
  out.codomain = h_to.group();
  out.matrix = IntMatrix(out.codomain.num_generators(), out.domain.num_generators());
  for (std::size_t j = 0; j < out.domain.basis_cycles.size(); ++j) {
    IntVector pushed = cochain * std::span<const Integer>(out.domain.basis_cycles[j]);
    out.matrix.set_column(j, h_to.express(pushed));
  }
  out.report = analyze_group_map(out.matrix, out.domain, out.codomain);
  return out;
}

bool is_surjective_on_generators(const ChainMap& f) {
  for (std::size_t k = 0; k < f.maps.size(); ++k) {
    SmithForm snf = smith_normal_form(f.maps[k].hcat(torsion_relations(f.target, k)));
    if (snf.rank != f.target.size(k)) return false;
    for (std::size_t i = 0; i < snf.rank; ++i)
      if (snf.s(i, i) != 1) return false;
  }
  return true;
}

}  // namespace foldcob::algebra
