#include "holonomy/lattices.hpp"

#include <algorithm>

#include "holonomy/error.hpp"

namespace holo {

GLattice::GLattice(GroupPtr g, std::size_t rank,
                   std::vector<IntMatrix> generator_action)
    : group_(g), rank_(rank) {
  const FiniteGroup& grp = *group_;
  check(generator_action.size() == grp.generators().size(),
        ErrorKind::validation, "one action matrix per generator required");
  for (const auto& m : generator_action) {
    check(m.rows() == rank_ && m.cols() == rank_, ErrorKind::validation,
          "action matrix has wrong shape");
    Int d = m.det();
    check(d == 1 || d == -1, ErrorKind::validation,
          "action matrix is not in GL(n,Z)");
  }
  action_.assign(grp.order(), IntMatrix::identity(rank_));
  for (std::size_t e = 1; e < grp.order(); ++e) {
    IntMatrix m = IntMatrix::identity(rank_);
    for (int gi : grp.word(static_cast<int>(e))) m = m * generator_action[gi];
    action_[e] = std::move(m);
  }
  verify();
}

GLattice GLattice::from_element_matrices(GroupPtr g, std::size_t rank,
                                         std::vector<IntMatrix> matrices) {
  GLattice l(g, rank);
  check(matrices.size() == g->order(), ErrorKind::validation,
        "one matrix per element required");
  l.action_ = std::move(matrices);
  l.verify();
  return l;
}

GLattice GLattice::trivial(GroupPtr g, std::size_t rank) {
  GLattice l(g, rank);
  l.action_.assign(g->order(), IntMatrix::identity(rank));
  return l;
}

void GLattice::verify() const {
  const FiniteGroup& g = *group_;
  check(action_[0].is_identity(), ErrorKind::validation,
        "identity does not act as the identity matrix");
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      check(action_[a] * action_[b] ==
                action_[g.mul(static_cast<int>(a), static_cast<int>(b))],
            ErrorKind::validation, "action does not respect the Cayley table");
}

bool GLattice::faithful() const {
  for (std::size_t e = 1; e < group_->order(); ++e)
    if (action_[e].is_identity()) return false;
  return true;
}

IntVec lattice_character(const GLattice& l) {
  const FiniteGroup& g = l.group();
  IntVec chi(g.num_classes());
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    const IntMatrix& m = l.act(g.class_rep(static_cast<int>(c)));
    Int tr = 0;
    for (std::size_t i = 0; i < l.rank(); ++i) tr += m.at(i, i);
    chi[c] = tr;
  }
  return chi;
}

std::vector<std::pair<std::size_t, std::uint64_t>> irr_constituents(
    const GLattice& l, const CharacterTable& t) {
  check(l.rank() >= 1, ErrorKind::validation, "zero-rank lattice");
  return multiplicities(t, lattice_character(l));
}

HomogeneityReport homogeneity_test(
    const GLattice& l, const CharacterTable& t,
    const std::vector<std::vector<std::size_t>>& orbits) {
  check(l.rank() >= 1, ErrorKind::validation, "zero-rank lattice");
  auto constituents = irr_constituents(l, t);
  HomogeneityReport rep;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    bool hit = false;
    for (auto [row, mult] : constituents)
      if (std::find(orbits[o].begin(), orbits[o].end(), row) !=
          orbits[o].end())
        hit = true;
    if (hit) rep.orbits_hit.push_back(o);
  }
  rep.component_count = rep.orbits_hit.size();
  rep.homogeneous = rep.component_count == 1;
  return rep;
}

std::size_t isotypic_rank(const GLattice& l, const CharacterTable& t,
                          const std::vector<std::size_t>& orbit) {
  const FiniteGroup& g = l.group();
  // |G| * projector = sum over classes of c_C * S_C with
  // c_C = sum_{chi in orbit} chi(1) chi(C^{-1}), a rational integer
  std::vector<Int> coeff(g.num_classes(), 0);
  CycField f = cyclotomic_field(static_cast<unsigned>(t.root_order));
  std::vector<std::vector<CycInt>> lifted;
  for (std::size_t row : orbit) lifted.push_back(lift_to_cyclotomic(t, row));
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    std::size_t cinv = g.inverse_class(static_cast<int>(c));
    CycInt total = cyc_zero(f);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      total = cyc_add(
          total, cyc_scale(Int(static_cast<unsigned long>(t.degrees[orbit[i]])),
                           lifted[i][cinv]));
    check_internal(cyc_is_rational(total),
                   "orbit coefficient sum is not rational");
    coeff[c] = total[0];
  }

  IntMatrix scaled(l.rank(), l.rank());
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    if (coeff[c] == 0) continue;
    IntMatrix class_sum(l.rank(), l.rank());
    for (int e : g.class_members(static_cast<int>(c)))
      class_sum = class_sum + l.act(e);
    scaled = scaled + class_sum * coeff[c];
  }
  return rank(scaled);
}

IntMatrix fixed_sublattice(const GLattice& l, const Subgroup& h) {
  std::size_t n = l.rank();
  // stack (rho(h) - I) for all h and take the saturated kernel
  IntMatrix stacked(h.elements.size() * n, n);
  std::size_t row = 0;
  for (int e : h.elements) {
    const IntMatrix& m = l.act(e);
    for (std::size_t i = 0; i < n; ++i, ++row)
      for (std::size_t j = 0; j < n; ++j)
        stacked.at(row, j) = m.at(i, j) - (i == j ? 1 : 0);
  }
  return kernel_basis(stacked);
}

GLattice restrict_lattice(const GLattice& l, GroupPtr h_group,
                          const std::vector<int>& embed) {
  std::vector<IntMatrix> mats;
  mats.reserve(h_group->order());
  for (std::size_t i = 0; i < h_group->order(); ++i)
    mats.push_back(l.act(embed[i]));
  return GLattice::from_element_matrices(h_group, l.rank(), std::move(mats));
}

GLattice direct_sum(const GLattice& a, const GLattice& b) {
  check(a.group_handle() == b.group_handle(), ErrorKind::validation,
        "direct sum requires the same group object");
  std::size_t n = a.rank() + b.rank();
  std::vector<IntMatrix> mats;
  for (std::size_t e = 0; e < a.group().order(); ++e) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < a.rank(); ++i)
      for (std::size_t j = 0; j < a.rank(); ++j)
        m.at(i, j) = a.act(static_cast<int>(e)).at(i, j);
    for (std::size_t i = 0; i < b.rank(); ++i)
      for (std::size_t j = 0; j < b.rank(); ++j)
        m.at(a.rank() + i, a.rank() + j) = b.act(static_cast<int>(e)).at(i, j);
    mats.push_back(std::move(m));
  }
  return GLattice::from_element_matrices(a.group_handle(), n, std::move(mats));
}

}  // namespace holo
