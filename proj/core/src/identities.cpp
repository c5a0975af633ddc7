#include "foldcob/identities.hpp"

#include "foldcob/smith.hpp"

#include <sstream>
#include <stdexcept>

namespace foldcob::fibers {

using algebra::Integer;
using algebra::IntMatrix;
using algebra::IntVector;

namespace {

void append_term(std::ostringstream& os, const Integer& c, const std::string& symbol, bool& first) {
  if (c == 0) return;
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  const Integer a = abs(c);
  if (a != 1) os << a.get_str() << "*";
  os << "|" << symbol << "|";
  first = false;
}

}  // namespace

std::string CountingIdentities::render(const CountingIdentity& identity) const {
  std::ostringstream os;
  bool first = true;
  const bool solved = !algebra::is_zero(identity.F);
  if (solved) {
    // Exactly one |X(f)| with coefficient 1 on the left.
    for (std::size_t i = 0; i < codim1.size(); ++i)
      if (identity.f[i] != 0) append_term(os, identity.f[i], codim1[i].label() + "(f)", first);
    os << " =";
    bool rhs_first = true;
    std::ostringstream rhs;
    for (std::size_t i = 0; i < codim2.size(); ++i)
      append_term(rhs, -identity.F[i], codim2[i].label() + "(F)", rhs_first);
    os << " " << rhs.str();
    return os.str();
  }
  for (std::size_t i = 0; i < codim1.size(); ++i) append_term(os, identity.f[i], codim1[i].label() + "(f)", first);
  if (first) os << "0";
  os << " = 0";
  return os.str();
}

CountingIdentities counting_identities(CatalogId id) {
  CatalogId cusped;
  switch (id) {
    case CatalogId::CO32:
    case CatalogId::CUSP32: cusped = CatalogId::CUSP32; break;
    case CatalogId::BCUSP32: cusped = CatalogId::BCUSP32; break;
    default: throw std::invalid_argument("counting identities need codimension-2 incidence data; " + to_string(id) +
                                         " is not one of CO32, CUSP32, BCUSP32");
  }
  const algebra::MixedComplex cx = catalog(id);
  CountingIdentities out{id, cx.generators.at(1), cx.generators.at(2), {}, {}};
  const IntMatrix& delta1 = cx.diffs.at(1);
  for (std::size_t x = 0; x < out.codim1.size(); ++x) {
    CountingIdentity ident{IntVector(out.codim1.size(), Integer(0)), delta1.column(x)};
    ident.f[x] = 1;
    out.per_class.push_back(std::move(ident));
  }

  const algebra::MixedComplex cusp = catalog(cusped);
  const IntMatrix basis = algebra::row_hermite_form(algebra::kernel_basis(cusp.diffs.at(1)).transpose());
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    IntVector f(out.codim1.size(), Integer(0));
    // Both catalogs list the codimension-1 generators in the same order.
    for (std::size_t i = 0; i < cusp.size(1); ++i) f[cx.index_of(1, cusp.generators[1][i].label())] = basis(r, i);
    out.eliminated.push_back({std::move(f), IntVector(out.codim2.size(), Integer(0))});
  }
  return out;
}

IntVector bcusp_delta1(std::span<const Integer> cochain) {
  static const algebra::MixedComplex cx = catalog(CatalogId::BCUSP32);
  return cx.diffs.at(1) * cochain;
}

CuspCocycleReport cusp_cocycle_check() {
  const algebra::MixedComplex cx = catalog(CatalogId::BCUSP32);
  CuspCocycleReport r;
  r.c1 = cx.vector(1, {{"Iao", 1}, {"Iae", -1}, {"I1o", 1}, {"I1e", -1}});
  r.c2 = cx.vector(1, {{"I0o", -1}, {"I0e", 1}});
  r.cusp_sum = cx.vector(2, {{"IIao", 1}, {"IIae", 1}, {"IIgo", 1}, {"IIge", 1}});
  r.delta_c1 = cx.diffs[1] * std::span<const Integer>(r.c1);
  r.delta_c2 = cx.diffs[1] * std::span<const Integer>(r.c2);
  r.delta_c2_is_cusp_sum = r.delta_c2 == r.cusp_sum;
  IntVector total(r.delta_c1.size());
  bool negative = true;
  for (std::size_t i = 0; i < total.size(); ++i) {
    total[i] = r.delta_c1[i] + r.delta_c2[i];
    if (r.delta_c1[i] != -r.delta_c2[i]) negative = false;
  }
  r.delta_c1_is_negative = negative;
  r.sum_is_cocycle = algebra::is_zero(total);
  return r;
}

}  // namespace foldcob::fibers
