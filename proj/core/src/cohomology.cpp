#include "holonomy/cohomology.hpp"

#include <algorithm>

#include "holonomy/error.hpp"

namespace holo {

namespace {

// flat index of f(a,b)_i over non-identity a, b
std::size_t pair_index(std::size_t order, std::size_t rank, int a, int b,
                       std::size_t i) {
  std::size_t m = order - 1;
  return (static_cast<std::size_t>(a - 1) * m +
          static_cast<std::size_t>(b - 1)) *
             rank +
         i;
}

}  // namespace

std::size_t cochain2_size(const FiniteGroup& g, std::size_t rank) {
  std::size_t m = g.order() - 1;
  return m * m * rank;
}

IntVec cochain2_value(const Cochain2& f, const FiniteGroup& g,
                      std::size_t rank, int a, int b) {
  IntVec v(rank);
  if (a == 0 || b == 0) return v;
  for (std::size_t i = 0; i < rank; ++i)
    v[i] = f[pair_index(g.order(), rank, a, b, i)];
  return v;
}

void cochain2_set(Cochain2& f, const FiniteGroup& g, std::size_t rank, int a,
                  int b, const IntVec& value) {
  check(a != 0 && b != 0, ErrorKind::validation,
        "normalized cochain has no identity coordinates");
  for (std::size_t i = 0; i < rank; ++i)
    f[pair_index(g.order(), rank, a, b, i)] = value[i];
}

bool is_cocycle(const Cochain2& f, const GLattice& l) {
  const FiniteGroup& g = l.group();
  std::size_t n = l.rank();
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      for (std::size_t c = 0; c < g.order(); ++c) {
        int ai = static_cast<int>(a), bi = static_cast<int>(b),
            ci = static_cast<int>(c);
        IntVec lhs = l.act(ai) * cochain2_value(f, g, n, bi, ci);
        IntVec t1 = cochain2_value(f, g, n, g.mul(ai, bi), ci);
        IntVec t2 = cochain2_value(f, g, n, ai, g.mul(bi, ci));
        IntVec t3 = cochain2_value(f, g, n, ai, bi);
        for (std::size_t i = 0; i < n; ++i)
          if (lhs[i] - t1[i] + t2[i] - t3[i] != 0) return false;
      }
  return true;
}

CoboundaryMatrices coboundary_matrices(const GLattice& l, std::size_t cap) {
  const FiniteGroup& g = l.group();
  check(g.order() <= cap, ErrorKind::cap, "group exceeds the cohomology cap");
  std::size_t n = l.rank();
  std::size_t m = g.order() - 1;
  std::size_t dim1 = m * n, dim2 = m * m * n, dim3 = m * m * m * n;

  // (d1 c)(a,b) = a.c(b) - c(ab) + c(a), normalized coordinates
  IntMatrix d1(dim2, dim1);
  for (int a = 1; a <= static_cast<int>(m); ++a)
    for (int b = 1; b <= static_cast<int>(m); ++b) {
      const IntMatrix& rho = l.act(a);
      int ab = g.mul(a, b);
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t row = pair_index(g.order(), n, a, b, i);
        for (std::size_t j = 0; j < n; ++j)
          d1.at(row, static_cast<std::size_t>(b - 1) * n + j) += rho.at(i, j);
        if (ab != 0)
          d1.at(row, static_cast<std::size_t>(ab - 1) * n + i) -= 1;
        d1.at(row, static_cast<std::size_t>(a - 1) * n + i) += 1;
      }
    }

  // (d2 f)(a,b,c) = a.f(b,c) - f(ab,c) + f(a,bc) - f(a,b)
  IntMatrix d2(dim3, dim2);
  std::size_t row = 0;
  for (int a = 1; a <= static_cast<int>(m); ++a)
    for (int b = 1; b <= static_cast<int>(m); ++b)
      for (int c = 1; c <= static_cast<int>(m); ++c) {
        const IntMatrix& rho = l.act(a);
        int ab = g.mul(a, b), bc = g.mul(b, c);
        for (std::size_t i = 0; i < n; ++i, ++row) {
          for (std::size_t j = 0; j < n; ++j)
            d2.at(row, pair_index(g.order(), n, b, c, j)) += rho.at(i, j);
          if (ab != 0) d2.at(row, pair_index(g.order(), n, ab, c, i)) -= 1;
          if (bc != 0) d2.at(row, pair_index(g.order(), n, a, bc, i)) += 1;
          d2.at(row, pair_index(g.order(), n, a, b, i)) -= 1;
        }
      }
  return {std::move(d1), std::move(d2)};
}

H2Group::H2Group(GLattice l, std::size_t cap) : lattice_(std::move(l)) {
  CoboundaryMatrices d = coboundary_matrices(lattice_, cap);
  check_internal((d.d2 * d.d1).is_zero(), "d2 * d1 != 0");
  kernel_ = kernel_basis(d.d2);
  std::size_t k = kernel_.rows();

  // coordinates of each coboundary in the kernel basis
  IntMatrix kt = kernel_.transpose();
  IntMatrix y(k, d.d1.cols());
  for (std::size_t c = 0; c < d.d1.cols(); ++c) {
    auto z = solve_integer(kt, d.d1.col(c));
    check_internal(z.has_value(), "coboundary outside the cocycle kernel");
    for (std::size_t i = 0; i < k; ++i) y.at(i, c) = (*z)[i];
  }
  SmithDecomposition s = smith_normal_form(y);
  check(s.rank() == k, ErrorKind::internal,
        "free part detected in H^2 of a finite group");
  u_ = s.U;
  u_inv_ = unimodular_inverse(u_);
  factors_.resize(k);
  for (std::size_t i = 0; i < k; ++i) factors_[i] = s.D.at(i, i);
}

IntVec H2Group::invariant_factors() const {
  IntVec f;
  for (const Int& d : factors_)
    if (d > 1) f.push_back(d);
  return f;
}

Int H2Group::order() const {
  Int o = 1;
  for (const Int& d : factors_) o *= d;
  return o;
}

H2Element H2Group::zero() const { return H2Element{IntVec(factors_.size())}; }

bool H2Group::is_zero(const H2Element& a) const {
  return std::all_of(a.coords.begin(), a.coords.end(),
                     [](const Int& x) { return x == 0; });
}

H2Element H2Group::add(const H2Element& a, const H2Element& b) const {
  H2Element r = zero();
  for (std::size_t i = 0; i < factors_.size(); ++i)
    r.coords[i] = (a.coords[i] + b.coords[i]) % factors_[i];
  return r;
}

H2Element H2Group::scale(const Int& k, const H2Element& a) const {
  H2Element r = zero();
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    r.coords[i] = (k * a.coords[i]) % factors_[i];
    if (r.coords[i] < 0) r.coords[i] += factors_[i];
  }
  return r;
}

H2Element H2Group::reduce(const Cochain2& f) const {
  check(f.size() == cochain2_size(group(), lattice_.rank()),
        ErrorKind::validation, "cochain has wrong length");
  check(is_cocycle(f, lattice_), ErrorKind::validation,
        "cochain is not a cocycle");
  auto z = solve_integer(kernel_.transpose(), f);
  check_internal(z.has_value(), "cocycle outside the computed kernel");
  IntVec w = u_ * *z;
  H2Element r = zero();
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    r.coords[i] = w[i] % factors_[i];
    if (r.coords[i] < 0) r.coords[i] += factors_[i];
  }
  return r;
}

Cochain2 H2Group::lift(const H2Element& a) const {
  IntVec z = u_inv_ * a.coords;
  Cochain2 f(cochain2_size(group(), lattice_.rank()));
  for (std::size_t i = 0; i < kernel_.rows(); ++i) {
    if (z[i] == 0) continue;
    for (std::size_t j = 0; j < kernel_.cols(); ++j)
      f[j] += z[i] * kernel_.at(i, j);
  }
  return f;
}

std::vector<H2Element> H2Group::all_elements() const {
  std::vector<H2Element> out{zero()};
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] <= 1) continue;
    std::vector<H2Element> next;
    for (const H2Element& e : out)
      for (Int v = 0; v < factors_[i]; ++v) {
        H2Element x = e;
        x.coords[i] = v;
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

H2Group h2(const GLattice& l, std::size_t cap) { return H2Group(l, cap); }

IntVec CyclicH2::invariant_factors() const {
  IntVec f;
  for (const Int& d : factors)
    if (d > 1) f.push_back(d);
  return f;
}

IntVec CyclicH2::reduce(const IntVec& t) const {
  // coordinates of t with respect to the fixed basis
  auto y = solve_integer(fixed_basis.transpose(), t);
  check(y.has_value(), ErrorKind::validation,
        "element is not in the fixed sublattice");
  IntVec w = u * *y;
  IntVec r(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    r[i] = w[i] % factors[i];
    if (r[i] < 0) r[i] += factors[i];
  }
  return r;
}

bool CyclicH2::is_zero_class(const IntVec& t) const {
  IntVec r = reduce(t);
  return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
}

CyclicH2 h2_cyclic(const GLattice& l) {
  const FiniteGroup& g = l.group();
  check(g.is_cyclic(g.whole_group()), ErrorKind::validation,
        "group is not cyclic");
  std::size_t n = l.rank();
  CyclicH2 r;
  r.fixed_basis = fixed_sublattice(l, g.whole_group());
  std::size_t f = r.fixed_basis.rows();

  IntMatrix norm(n, n);
  for (std::size_t e = 0; e < g.order(); ++e)
    norm = norm + l.act(static_cast<int>(e));

  // image of the norm in fixed-basis coordinates; |C| M^C <= N M, so the
  // image has full rank f
  IntMatrix bt = r.fixed_basis.transpose();
  IntMatrix y(f, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto coords = solve_integer(bt, norm.col(j));
    check_internal(coords.has_value(), "norm image outside the fixed lattice");
    for (std::size_t i = 0; i < f; ++i) y.at(i, j) = (*coords)[i];
  }
  SmithDecomposition s = smith_normal_form(y);
  check_internal(s.rank() == f, "norm image not of full rank");
  r.u = s.U;
  r.factors.resize(f);
  for (std::size_t i = 0; i < f; ++i) r.factors[i] = s.D.at(i, i);
  return r;
}

H2Element restrict_class(const H2Group& h2_g, const H2Element& a,
                         const H2Group& h2_h, const std::vector<int>& embed) {
  const FiniteGroup& g = h2_g.group();
  const FiniteGroup& h = h2_h.group();
  std::size_t n = h2_g.lattice().rank();
  check(h2_h.lattice().rank() == n, ErrorKind::validation,
        "restricted lattice rank mismatch");
  Cochain2 f = h2_g.lift(a);
  Cochain2 fh(cochain2_size(h, n));
  for (std::size_t x = 1; x < h.order(); ++x)
    for (std::size_t y = 1; y < h.order(); ++y)
      cochain2_set(fh, h, n, static_cast<int>(x), static_cast<int>(y),
                   cochain2_value(f, g, n, embed[x], embed[y]));
  return h2_h.reduce(fh);
}

IntVec cyclic_restriction_obstruction(const GLattice& l, const Cochain2& f,
                                      int c) {
  const FiniteGroup& g = l.group();
  std::size_t n = l.rank();
  int m = g.element_order(c);
  IntVec t(n);
  int pw = 0;  // c^0
  for (int i = 0; i < m; ++i) {
    IntVec v = cochain2_value(f, g, n, pw, c);
    for (std::size_t j = 0; j < n; ++j) t[j] += v[j];
    pw = g.mul(pw, c);
  }
  return t;
}

bool cyclic_restriction_vanishes(const GLattice& l, const Cochain2& f, int c) {
  const FiniteGroup& g = l.group();
  std::size_t n = l.rank();
  int m = g.element_order(c);
  IntVec t = cyclic_restriction_obstruction(l, f, c);
  IntMatrix norm(n, n);
  int pw = 0;
  for (int i = 0; i < m; ++i) {
    norm = norm + l.act(pw);
    pw = g.mul(pw, c);
  }
  return solve_integer(norm, t).has_value();
}

bool is_special(const H2Group& h2_g, const H2Element& a) {
  const FiniteGroup& g = h2_g.group();
  if (g.order() == 1) return true;  // vacuously special
  Cochain2 f = h2_g.lift(a);
  for (const auto& [sub, gen] : g.prime_order_subgroups())
    if (cyclic_restriction_vanishes(h2_g.lattice(), f, gen)) return false;
  return true;
}

TrivialConstituentVerdict trivial_constituent_check(const GLattice& l) {
  const FiniteGroup& g = l.group();
  CyclicH2 c = h2_cyclic(l);
  TrivialConstituentVerdict v;
  v.h2_nonzero = !c.invariant_factors().empty();
  v.fixed_rank = fixed_sublattice(l, g.whole_group()).rows();
  if (!v.h2_nonzero) {
    v.vacuous = true;
    return v;
  }
  check_internal(v.fixed_rank >= 1,
                 "nonzero cyclic H^2 without a trivial constituent");
  return v;
}

}  // namespace holo
