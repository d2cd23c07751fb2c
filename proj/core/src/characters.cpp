#include "holonomy/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "holonomy/error.hpp"
#include "holonomy/modp.hpp"

namespace holo {

std::vector<std::vector<std::vector<std::uint64_t>>> class_algebra(
    const FiniteGroup& g) {
  std::size_t r = g.num_classes();
  std::vector a(r, std::vector(r, std::vector<std::uint64_t>(r, 0)));
  for (std::size_t k = 0; k < r; ++k) {
    int z = g.class_rep(static_cast<int>(k));
    for (std::size_t x = 0; x < g.order(); ++x) {
      int y = g.mul(g.inv(static_cast<int>(x)), z);
      a[g.class_of(static_cast<int>(x))][g.class_of(y)][k]++;
    }
  }
  return a;
}

namespace {

std::uint64_t smallest_table_prime(std::uint64_t modulus, std::uint64_t bound) {
  // smallest prime = 1 (mod modulus) exceeding bound
  std::uint64_t ell = modulus + 1;
  while (ell <= bound) ell += modulus;
  while (!is_prime_u64(ell)) ell += modulus;
  return ell;
}

std::uint64_t primitive_root_power(std::uint64_t ell, std::uint64_t n) {
  // element of exact multiplicative order n mod ell, from the least
  // primitive root
  std::uint64_t phi = ell - 1;
  std::vector<std::uint64_t> pf;
  std::uint64_t m = phi;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      pf.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) pf.push_back(m);
  for (std::uint64_t g = 2; g < ell; ++g) {
    bool primitive = true;
    for (std::uint64_t q : pf)
      if (powmod(g, phi / q, ell) == 1) {
        primitive = false;
        break;
      }
    if (primitive) return powmod(g, phi / n, ell);
  }
  throw Error(ErrorKind::internal, "no primitive root mod ell");
}

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

Vec mat_apply(const Mat& m, const Vec& v, std::uint64_t ell) {
  Vec r(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      r[i] = addmod(r[i], mulmod(m[i][j], v[j], ell), ell);
  return r;
}

// coordinates of w in the span of basis (solved by elimination); the basis
// vectors are linearly independent and w lies in their span
Vec coords_in_basis(const std::vector<Vec>& basis, const Vec& w,
                    std::uint64_t ell) {
  std::size_t k = basis.size(), n = w.size();
  Mat aug(n, Vec(k + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = basis[j][i];
    aug[i][k] = w[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < n; ++c) {
    std::size_t p = row;
    while (p < n && aug[p][c] == 0) ++p;
    check_internal(p < n, "dependent basis in eigenspace splitting");
    std::swap(aug[row], aug[p]);
    std::uint64_t inv = invmod(aug[row][c], ell);
    for (std::size_t j = 0; j <= k; ++j) aug[row][j] = mulmod(aug[row][j], inv, ell);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || aug[i][c] == 0) continue;
      std::uint64_t f = aug[i][c];
      for (std::size_t j = 0; j <= k; ++j)
        aug[i][j] = submod(aug[i][j], mulmod(f, aug[row][j], ell), ell);
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    check_internal(aug[i][k] == 0, "vector outside subspace");
  Vec x(k, 0);
  for (std::size_t i = 0; i < row; ++i) x[pivot_col[i]] = aug[i][k];
  return x;
}

// characteristic polynomial mod ell (Faddeev-LeVerrier; ell > dimension)
Vec char_poly(const Mat& m, std::uint64_t ell) {
  std::size_t k = m.size();
  Mat acc(k, Vec(k, 0));
  Vec c(k + 1, 0);
  c[k] = 1;
  Mat mj(k, Vec(k, 0));
  for (std::size_t i = 0; i < k; ++i) mj[i][i] = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    // mj = m * (previous mj + c_{k-j+1} I) at step j>1; at j=1, mj = m
    Mat next(k, Vec(k, 0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t t = 0; t < k; ++t) {
        std::uint64_t s = 0;
        for (std::size_t u = 0; u < k; ++u)
          s = addmod(s, mulmod(m[i][u], mj[u][t], ell), ell);
        next[i][t] = s;
      }
    std::uint64_t tr = 0;
    for (std::size_t i = 0; i < k; ++i) tr = addmod(tr, next[i][i], ell);
    std::uint64_t cj = mulmod(tr, invmod(j % ell, ell), ell);
    cj = submod(0, cj, ell);
    c[k - j] = cj;
    for (std::size_t i = 0; i < k; ++i) next[i][i] = addmod(next[i][i], cj, ell);
    mj = std::move(next);
  }
  (void)acc;
  return c;  // low-to-high, monic
}

std::vector<Vec> nullspace(const Mat& m, std::uint64_t ell) {
  std::size_t n = m.size();
  Mat a = m;
  std::vector<long> pivot_of_col(n, -1);
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < n; ++c) {
    std::size_t p = row;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[row], a[p]);
    std::uint64_t inv = invmod(a[row][c], ell);
    for (std::size_t j = 0; j < n; ++j) a[row][j] = mulmod(a[row][j], inv, ell);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][c] == 0) continue;
      std::uint64_t f = a[i][c];
      for (std::size_t j = 0; j < n; ++j)
        a[i][j] = submod(a[i][j], mulmod(f, a[row][j], ell), ell);
    }
    pivot_of_col[c] = static_cast<long>(row);
    ++row;
  }
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < n; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    Vec v(n, 0);
    v[c] = 1;
    for (std::size_t cc = 0; cc < n; ++cc)
      if (pivot_of_col[cc] >= 0)
        v[cc] = submod(0, a[static_cast<std::size_t>(pivot_of_col[cc])][c], ell);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::size_t CharacterTable::trivial_row() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool all_one = true;
    for (std::uint64_t v : rows[i]) all_one = all_one && v == 1;
    if (all_one && degrees[i] == 1) return i;
  }
  throw Error(ErrorKind::internal, "trivial character missing from table");
}

CharacterTable character_table(const FiniteGroup& g, GroupPtr handle,
                               std::uint64_t seed,
                               std::uint64_t root_multiple,
                               std::uint64_t min_prime) {
  (void)seed;  // construction is deterministic; the flag is part of the CLI
               // contract and reserved for randomized splitting fallbacks
  std::size_t r = g.num_classes();
  std::size_t n = g.order();
  std::uint64_t e = g.exponent();
  std::uint64_t big = std::lcm<std::uint64_t>(e, std::max<std::uint64_t>(
                                                     root_multiple, 1));
  CharacterTable t;
  t.group = handle;
  t.root_order = e;
  t.ell = smallest_table_prime(big, std::max<std::uint64_t>(2 * n, min_prime));
  t.big_order = big;
  t.big_root = primitive_root_power(t.ell, big);
  t.root = powmod(t.big_root, big / e, t.ell);
  std::uint64_t ell = t.ell;

  auto alg = class_algebra(g);
  // class matrix i acts on eigenvalue vectors: (M_i v)_j = sum_k a[i][j][k] v_k
  auto class_matrix = [&](std::size_t i) {
    Mat m(r, Vec(r, 0));
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) m[j][k] = alg[i][j][k] % ell;
    return m;
  };

  // split F_ell^r into common eigenspaces
  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> full;
    for (std::size_t i = 0; i < r; ++i) {
      Vec v(r, 0);
      v[i] = 1;
      full.push_back(std::move(v));
    }
    spaces.push_back(std::move(full));
  }
  for (std::size_t i = 1; i < r; ++i) {
    Mat mi = class_matrix(i);
    std::vector<std::vector<Vec>> next;
    for (auto& space : spaces) {
      if (space.size() == 1) {
        next.push_back(std::move(space));
        continue;
      }
      std::size_t k = space.size();
      // restriction of mi to the subspace
      Mat restr(k, Vec(k, 0));
      for (std::size_t b = 0; b < k; ++b) {
        Vec w = mat_apply(mi, space[b], ell);
        Vec c = coords_in_basis(space, w, ell);
        for (std::size_t a2 = 0; a2 < k; ++a2) restr[a2][b] = c[a2];
      }
      Vec poly = char_poly(restr, ell);
      std::size_t found_dim = 0;
      for (std::uint64_t lam = 0; lam < ell && found_dim < k; ++lam) {
        // Horner
        std::uint64_t val = 0;
        for (std::size_t j = poly.size(); j-- > 0;)
          val = addmod(mulmod(val, lam, ell), poly[j], ell);
        if (val != 0) continue;
        Mat shifted = restr;
        for (std::size_t d = 0; d < k; ++d)
          shifted[d][d] = submod(shifted[d][d], lam, ell);
        auto sub = nullspace(shifted, ell);
        if (sub.empty()) continue;
        std::vector<Vec> eig;
        for (const Vec& c : sub) {
          Vec v(space[0].size(), 0);
          for (std::size_t b = 0; b < k; ++b)
            for (std::size_t x = 0; x < v.size(); ++x)
              v[x] = addmod(v[x], mulmod(c[b], space[b][x], ell), ell);
          eig.push_back(std::move(v));
        }
        found_dim += eig.size();
        next.push_back(std::move(eig));
      }
      check_internal(found_dim == k, "class matrix not diagonalizable");
    }
    spaces = std::move(next);
  }
  for (const auto& s : spaces)
    check_internal(s.size() == 1, "common eigenspaces not one-dimensional");
  check_internal(spaces.size() == r, "wrong number of eigenvectors");

  std::vector<std::uint64_t> class_size_inv(r), class_size_mod(r);
  for (std::size_t k = 0; k < r; ++k) {
    class_size_mod[k] = g.class_size(static_cast<int>(k)) % ell;
    class_size_inv[k] = invmod(class_size_mod[k], ell);
  }

  std::vector<std::pair<std::uint64_t, Vec>> built;  // (degree, values)
  Int degree_square_sum = 0;
  for (const auto& s : spaces) {
    const Vec& v = s[0];
    check_internal(v[0] != 0, "eigenvector with zero identity coordinate");
    std::uint64_t v0inv = invmod(v[0], ell);
    Vec lambda(r);
    for (std::size_t k = 0; k < r; ++k) lambda[k] = mulmod(v[k], v0inv, ell);
    std::uint64_t s2 = 0;
    for (std::size_t k = 0; k < r; ++k) {
      std::size_t kinv = g.inverse_class(static_cast<int>(k));
      s2 = addmod(s2, mulmod(mulmod(lambda[k], lambda[kinv], ell),
                             class_size_inv[k], ell),
                  ell);
    }
    std::uint64_t dsq = mulmod(n % ell, invmod(s2, ell), ell);
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      if (mulmod(d, d, ell) == dsq) {
        degree = d;
        break;
      }
    }
    check_internal(degree != 0, "degree recovery failed");
    Vec values(r);
    for (std::size_t k = 0; k < r; ++k)
      values[k] = mulmod(degree % ell, mulmod(lambda[k], class_size_inv[k], ell), ell);
    degree_square_sum += Int(static_cast<unsigned long>(degree)) *
                         Int(static_cast<unsigned long>(degree));
    built.emplace_back(degree, std::move(values));
  }
  check_internal(degree_square_sum == static_cast<unsigned long>(n),
                 "degree squares do not sum to the group order");

  // trivial character first, the rest ordered by (degree, values)
  std::sort(built.begin(), built.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return a.second < b.second;
            });
  auto is_trivial = [](const std::pair<std::uint64_t, Vec>& row) {
    if (row.first != 1) return false;
    return std::all_of(row.second.begin(), row.second.end(),
                       [](std::uint64_t x) { return x == 1; });
  };
  std::stable_partition(built.begin(), built.end(), is_trivial);

  for (auto& [d, values] : built) {
    t.degrees.push_back(d);
    t.rows.push_back(std::move(values));
  }

  // row orthogonality
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      std::uint64_t s3 = 0;
      for (std::size_t k = 0; k < r; ++k) {
        std::size_t kinv = g.inverse_class(static_cast<int>(k));
        s3 = addmod(s3,
                    mulmod(class_size_mod[k],
                           mulmod(t.rows[a][k], t.rows[b][kinv], ell), ell),
                    ell);
      }
      check_internal(s3 == (a == b ? n % ell : 0), "row orthogonality failed");
    }
  return t;
}

CharacterTable character_table(GroupPtr g, std::uint64_t seed,
                               std::uint64_t root_multiple,
                               std::uint64_t min_prime) {
  return character_table(*g, g, seed, root_multiple, min_prime);
}

std::vector<std::vector<std::size_t>> galois_orbits(const CharacterTable& t) {
  const FiniteGroup& g = *t.group;
  std::size_t r = t.num_rows();
  std::map<std::vector<std::uint64_t>, std::size_t> row_index;
  for (std::size_t i = 0; i < r; ++i) row_index[t.rows[i]] = i;

  std::vector<std::size_t> parent(r);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::uint64_t e = t.root_order;
  for (std::uint64_t k = 1; k < e; ++k) {
    if (std::gcd(k, e) != 1) continue;
    std::vector<std::size_t> pc(g.num_classes());
    for (std::size_t c = 0; c < g.num_classes(); ++c)
      pc[c] = g.power_class(static_cast<int>(c),
                            Int(static_cast<unsigned long>(k)));
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<std::uint64_t> twisted(g.num_classes());
      for (std::size_t c = 0; c < g.num_classes(); ++c)
        twisted[c] = t.rows[i][pc[c]];
      auto it = row_index.find(twisted);
      check_internal(it != row_index.end(),
                     "Galois twist left the character table");
      std::size_t a = find(i), b = find(it->second);
      if (a != b) parent[a] = b;
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < r; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> orbits;
  for (auto& [root, members] : groups) orbits.push_back(std::move(members));
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

std::vector<std::pair<std::size_t, std::uint64_t>> multiplicities_modl(
    const CharacterTable& t, const std::vector<std::uint64_t>& values,
    const Int& degree) {
  const FiniteGroup& g = *t.group;
  std::size_t r = t.num_rows();
  std::uint64_t ell = t.ell;
  check(values.size() == g.num_classes(), ErrorKind::validation,
        "class function has wrong length");
  check(Int(static_cast<unsigned long>(ell)) > degree, ErrorKind::validation,
        "table modulus too small to recover multiplicities of this degree");
  std::uint64_t n_inv = invmod(g.order() % ell, ell);
  std::vector<std::pair<std::size_t, std::uint64_t>> result;
  Int balance = 0;
  for (std::size_t i = 0; i < r; ++i) {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < g.num_classes(); ++k) {
      std::size_t kinv = g.inverse_class(static_cast<int>(k));
      s = addmod(s,
                 mulmod(g.class_size(static_cast<int>(k)) % ell,
                        mulmod(values[k], t.rows[i][kinv], ell), ell),
                 ell);
    }
    std::uint64_t m = mulmod(s, n_inv, ell);
    if (m != 0) result.emplace_back(i, m);
    balance += Int(static_cast<unsigned long>(m)) *
               Int(static_cast<unsigned long>(t.degrees[i]));
  }
  check(balance == degree, ErrorKind::validation,
        "class function is not a character (degree sum mismatch)");
  return result;
}

std::vector<std::pair<std::size_t, std::uint64_t>> multiplicities(
    const CharacterTable& t, const IntVec& class_fn) {
  std::vector<std::uint64_t> values(class_fn.size());
  for (std::size_t k = 0; k < class_fn.size(); ++k) {
    Int v = class_fn[k] % Int(static_cast<unsigned long>(t.ell));
    if (v < 0) v += static_cast<unsigned long>(t.ell);
    values[k] = v.get_ui();
  }
  check(!class_fn.empty(), ErrorKind::validation, "empty class function");
  return multiplicities_modl(t, values, class_fn[0]);
}

std::vector<Int> eigenvalue_multiplicities(const CharacterTable& t,
                                           std::size_t row, int element) {
  const FiniteGroup& g = *t.group;
  std::uint64_t ell = t.ell;
  int m = g.element_order(element);
  std::uint64_t wm = powmod(t.root, t.root_order / m, ell);
  std::vector<std::uint64_t> vals(m);
  for (int k = 0; k < m; ++k)
    vals[k] = t.rows[row][g.class_of(g.power(element, k))];
  std::uint64_t m_inv = invmod(m % ell, ell);
  std::vector<Int> mult(m);
  Int total = 0;
  for (int j = 0; j < m; ++j) {
    std::uint64_t s = 0;
    for (int k = 0; k < m; ++k) {
      std::uint64_t w = powmod(wm, static_cast<std::uint64_t>(
                                       (m - j) * static_cast<long>(k) % m),
                               ell);
      s = addmod(s, mulmod(vals[k], w, ell), ell);
    }
    std::uint64_t nj = mulmod(s, m_inv, ell);
    check_internal(nj <= t.degrees[row], "eigenvalue multiplicity too large");
    mult[j] = static_cast<unsigned long>(nj);
    total += mult[j];
  }
  check_internal(total == static_cast<unsigned long>(t.degrees[row]),
                 "eigenvalue multiplicities do not sum to the degree");
  return mult;
}

std::vector<CycInt> lift_to_cyclotomic(const CharacterTable& t,
                                       std::size_t row) {
  const FiniteGroup& g = *t.group;
  CycField f = cyclotomic_field(static_cast<unsigned>(t.root_order));
  std::vector<CycInt> lifted;
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    int rep = g.class_rep(static_cast<int>(c));
    int m = g.element_order(rep);
    std::vector<Int> mult = eigenvalue_multiplicities(t, row, rep);
    CycInt v = cyc_zero(f);
    for (int j = 0; j < m; ++j) {
      if (mult[j] == 0) continue;
      v = cyc_add(v, cyc_scale(mult[j], cyc_root_power(
                                            f, static_cast<long>(j) *
                                                   (t.root_order / m))));
    }
    check_internal(cyc_reduce_mod(f, v, t.root, t.ell) == t.rows[row][c],
                   "cyclotomic lift does not reduce to the table entry");
    lifted.push_back(std::move(v));
  }
  return lifted;
}

std::vector<std::pair<std::size_t, std::uint64_t>> restrict_character(
    const CharacterTable& t_g, const CharacterTable& t_h,
    const std::vector<int>& embed, std::size_t row) {
  const FiniteGroup& g = *t_g.group;
  const FiniteGroup& h = *t_h.group;
  check(embed.size() == h.order(), ErrorKind::validation,
        "embedding has wrong size");
  for (std::size_t a = 0; a < h.order(); ++a)
    for (std::size_t b = 0; b < h.order(); ++b)
      check(embed[h.mul(static_cast<int>(a), static_cast<int>(b))] ==
                g.mul(embed[a], embed[b]),
            ErrorKind::validation, "embedding is not a homomorphism");

  // restricted values land in Q(zeta_{e_H}); recover them exactly from the
  // eigenvalue multiplicities and re-reduce with the subgroup's own root
  std::vector<std::uint64_t> values(h.num_classes());
  for (std::size_t c = 0; c < h.num_classes(); ++c) {
    int rep = h.class_rep(static_cast<int>(c));
    int m = h.element_order(rep);
    std::vector<Int> mult =
        eigenvalue_multiplicities(t_g, row, embed[rep]);
    std::uint64_t wm = powmod(t_h.root, t_h.root_order / m, t_h.ell);
    std::uint64_t v = 0;
    for (int j = 0; j < m; ++j) {
      Int mj = mult[j] % Int(static_cast<unsigned long>(t_h.ell));
      v = addmod(v,
                 mulmod(mj.get_ui(),
                        powmod(wm, static_cast<std::uint64_t>(j), t_h.ell),
                        t_h.ell),
                 t_h.ell);
    }
    values[c] = v;
  }
  return multiplicities_modl(t_h, values,
                             Int(static_cast<unsigned long>(t_g.degrees[row])));
}

bool principal_block_test(const CharacterTable& t, std::size_t row,
                          std::uint64_t p) {
  const FiniteGroup& g = *t.group;
  check(p >= 2 && g.order() % p == 0, ErrorKind::validation,
        "p does not divide the group order");
  CycField f = cyclotomic_field(static_cast<unsigned>(t.root_order));
  auto factors = factor_cyclotomic_mod_p(static_cast<unsigned>(t.root_order), p);
  const std::vector<std::uint64_t>& ideal = factors.front();

  auto reduce_mod_ideal_is_zero = [&](const CycInt& v) {
    std::vector<std::uint64_t> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      Int x = v[i] % Int(static_cast<unsigned long>(p));
      if (x < 0) x += static_cast<unsigned long>(p);
      c[i] = x.get_ui();
    }
    // remainder modulo the chosen irreducible factor
    std::size_t deg = ideal.size() - 1;
    std::uint64_t lead_inv = invmod(ideal.back(), p);
    while (true) {
      while (!c.empty() && c.back() == 0) c.pop_back();
      if (c.size() <= deg) break;
      std::uint64_t q = mulmod(c.back(), lead_inv, p);
      std::size_t off = c.size() - ideal.size();
      for (std::size_t j = 0; j < ideal.size(); ++j)
        c[off + j] = submod(c[off + j], mulmod(q, ideal[j], p), p);
    }
    return std::all_of(c.begin(), c.end(),
                       [](std::uint64_t x) { return x == 0; });
  };

  std::vector<CycInt> lifted = lift_to_cyclotomic(t, row);
  Int d = static_cast<unsigned long>(t.degrees[row]);
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    // central character |C| chi(g_C) / chi(1), an algebraic integer
    CycInt num = cyc_scale(Int(static_cast<unsigned long>(
                               g.class_size(static_cast<int>(c)))),
                           lifted[c]);
    CycInt omega(num.size());
    for (std::size_t i = 0; i < num.size(); ++i) {
      check_internal(mpz_divisible_p(num[i].get_mpz_t(), d.get_mpz_t()),
                     "central character is not an algebraic integer");
      mpz_divexact(omega[i].get_mpz_t(), num[i].get_mpz_t(), d.get_mpz_t());
    }
    omega[0] -= g.class_size(static_cast<int>(c));
    if (!reduce_mod_ideal_is_zero(omega)) return false;
  }
  return true;
}

}  // namespace holo
