#include "holonomy/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "holonomy/error.hpp"

namespace holo {

bool Subgroup::contains(int e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

namespace {

// Concrete element during enumeration: a permutation or an integer matrix.
struct ConcreteElem {
  std::vector<int> perm;
  IntMatrix mat;
  bool is_perm = true;

  std::string key() const {
    std::ostringstream os;
    if (is_perm) {
      for (int x : perm) os << x << ',';
    } else {
      for (const Int& x : mat.data()) os << x.get_str() << ',';
    }
    return os.str();
  }
};

ConcreteElem mul_concrete(const ConcreteElem& a, const ConcreteElem& b) {
  ConcreteElem r;
  r.is_perm = a.is_perm;
  if (a.is_perm) {
    r.perm.resize(a.perm.size());
    // (a*b)(i) = a(b(i))
    for (std::size_t i = 0; i < a.perm.size(); ++i) r.perm[i] = a.perm[b.perm[i]];
  } else {
    r.mat = a.mat * b.mat;
  }
  return r;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> cayley,
                         std::vector<int> generators)
    : cayley_(std::move(cayley)), generators_(std::move(generators)) {
  std::size_t n = cayley_.size();
  check(n > 0, ErrorKind::validation, "empty Cayley table");
  for (const auto& row : cayley_)
    check(row.size() == n, ErrorKind::validation, "ragged Cayley table");
  for (std::size_t a = 0; a < n; ++a)
    check(cayley_[0][a] == static_cast<int>(a) &&
              cayley_[a][0] == static_cast<int>(a),
          ErrorKind::validation, "index 0 is not an identity");

  inverse_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (cayley_[a][b] == 0) {
        inverse_[a] = static_cast<int>(b);
        break;
      }
    check(inverse_[a] >= 0, ErrorKind::validation, "element has no inverse");
  }

  // associativity: full check for small tables, seeded spot check otherwise
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          check(cayley_[cayley_[a][b]][c] == cayley_[a][cayley_[b][c]],
                ErrorKind::validation, "Cayley table is not associative");
  } else {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<std::size_t> d(0, n - 1);
    for (int t = 0; t < 2000; ++t) {
      std::size_t a = d(rng), b = d(rng), c = d(rng);
      check(cayley_[cayley_[a][b]][c] == cayley_[a][cayley_[b][c]],
            ErrorKind::validation, "Cayley table is not associative");
    }
  }

  element_order_.assign(n, 1);
  exponent_ = 1;
  for (std::size_t a = 1; a < n; ++a) {
    int x = static_cast<int>(a);
    int ord = 1;
    while (x != 0) {
      x = cayley_[x][a];
      ++ord;
    }
    element_order_[a] = ord;
    exponent_ = std::lcm(exponent_, static_cast<std::size_t>(ord));
  }

  // conjugacy classes, ordered by least member; identity class first
  class_of_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    if (class_of_[a] >= 0) continue;
    int c = static_cast<int>(class_rep_.size());
    class_rep_.push_back(static_cast<int>(a));
    std::vector<int> members;
    std::vector<int> stack{static_cast<int>(a)};
    class_of_[a] = c;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (std::size_t g = 0; g < n; ++g) {
        int y = cayley_[cayley_[g][x]][inverse_[g]];
        if (class_of_[y] < 0) {
          class_of_[y] = c;
          stack.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    class_members_.push_back(std::move(members));
  }

  std::size_t total = 0;
  for (const auto& m : class_members_) {
    check(n % m.size() == 0, ErrorKind::validation,
          "class size does not divide the order");
    total += m.size();
  }
  check_internal(total == n, "class sizes do not sum to the order");
}

int FiniteGroup::power(int a, Int k) const {
  int m = element_order_[a];
  Int r = k % m;
  if (r < 0) r += m;
  long e = r.get_si();
  int x = 0;
  for (long i = 0; i < e; ++i) x = cayley_[x][a];
  return x;
}

bool FiniteGroup::is_abelian() const {
  return class_rep_.size() == order();
}

std::vector<int> FiniteGroup::word(int a) const {
  // BFS over the Cayley table mirrors the enumeration order
  std::size_t n = order();
  std::vector<int> parent(n, -1), via(n, -1);
  std::vector<int> queue{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (std::size_t g = 0; g < generators_.size(); ++g) {
      int y = cayley_[x][generators_[g]];
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = x;
        via[y] = static_cast<int>(g);
        queue.push_back(y);
      }
    }
  }
  check(seen[a], ErrorKind::internal, "element unreachable from generators");
  std::vector<int> w;
  for (int x = a; x != 0; x = parent[x]) w.push_back(via[x]);
  std::reverse(w.begin(), w.end());
  return w;
}

Subgroup FiniteGroup::whole_group() const {
  Subgroup s;
  s.elements.resize(order());
  std::iota(s.elements.begin(), s.elements.end(), 0);
  return s;
}

Subgroup FiniteGroup::generated_subgroup(const std::vector<int>& gens) const {
  std::set<int> closure{0};
  std::vector<int> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (int g : gens) {
      int y = cayley_[queue[qi]][g];
      if (closure.insert(y).second) queue.push_back(y);
    }
  return Subgroup{{closure.begin(), closure.end()}};
}

Subgroup FiniteGroup::conjugate_subgroup(const Subgroup& h, int g) const {
  std::vector<int> e;
  e.reserve(h.elements.size());
  for (int x : h.elements) e.push_back(cayley_[cayley_[g][x]][inverse_[g]]);
  std::sort(e.begin(), e.end());
  return Subgroup{std::move(e)};
}

bool FiniteGroup::is_normal(const Subgroup& h) const {
  for (std::size_t g = 0; g < order(); ++g)
    if (conjugate_subgroup(h, static_cast<int>(g)) != h) return false;
  return true;
}

Subgroup FiniteGroup::normal_closure(int e) const {
  std::vector<int> conj;
  for (std::size_t g = 0; g < order(); ++g)
    conj.push_back(cayley_[cayley_[g][e]][inverse_[g]]);
  return generated_subgroup(conj);
}

Subgroup FiniteGroup::product_subgroup(const std::vector<Subgroup>& parts) const {
  std::vector<int> gens;
  for (const auto& p : parts)
    gens.insert(gens.end(), p.elements.begin(), p.elements.end());
  return generated_subgroup(gens);
}

bool FiniteGroup::is_cyclic(const Subgroup& h) const {
  for (int e : h.elements)
    if (element_order_[e] == static_cast<int>(h.order())) return true;
  return h.order() == 1;
}

bool FiniteGroup::is_elementary_abelian(const Subgroup& h) const {
  if (h.order() == 1) return true;
  int p = element_order_[h.elements[1]];
  // p prime and every non-identity element of order p
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  for (int e : h.elements)
    if (e != 0 && element_order_[e] != p) return false;
  for (int a : h.elements)
    for (int b : h.elements)
      if (cayley_[a][b] != cayley_[b][a]) return false;
  return true;
}

std::vector<std::pair<Subgroup, int>> FiniteGroup::prime_order_subgroups()
    const {
  auto is_prime = [](int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  };
  std::set<Subgroup> all;
  for (std::size_t e = 1; e < order(); ++e)
    if (is_prime(element_order_[e]))
      all.insert(generated_subgroup({static_cast<int>(e)}));
  std::set<Subgroup> seen;
  std::vector<std::pair<Subgroup, int>> reps;
  for (const auto& h : all) {
    if (seen.count(h)) continue;
    Subgroup rep = h;
    for (std::size_t g = 0; g < order(); ++g) {
      Subgroup c = conjugate_subgroup(h, static_cast<int>(g));
      seen.insert(c);
      rep = std::min(rep, c);
    }
    reps.emplace_back(rep, rep.elements[1]);
  }
  return reps;
}

std::vector<Subgroup> FiniteGroup::minimal_normal_subgroups() const {
  check(order() > 1, ErrorKind::validation, "trivial group has no socle");
  std::set<Subgroup> closures;
  for (std::size_t e = 1; e < order(); ++e)
    closures.insert(normal_closure(static_cast<int>(e)));
  std::vector<Subgroup> minimal;
  for (const auto& n : closures) {
    bool is_min = true;
    for (const auto& m : closures) {
      if (m == n) continue;
      if (std::includes(n.elements.begin(), n.elements.end(),
                        m.elements.begin(), m.elements.end())) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(n);
  }
  return minimal;
}

Subgroup FiniteGroup::socle() const {
  return product_subgroup(minimal_normal_subgroups());
}

Subgroup FiniteGroup::normalizer(const Subgroup& h) const {
  std::vector<int> e;
  for (std::size_t g = 0; g < order(); ++g)
    if (conjugate_subgroup(h, static_cast<int>(g)) == h)
      e.push_back(static_cast<int>(g));
  return Subgroup{std::move(e)};
}

Subgroup FiniteGroup::sylow_subgroup(std::uint64_t p) const {
  check(p >= 2 && order() % p == 0, ErrorKind::validation,
        "p does not divide the group order");
  std::size_t q = 1;
  std::size_t n = order();
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  auto p_power_order = [&](int e) {
    int o = element_order_[e];
    while (o % static_cast<int>(p) == 0) o /= static_cast<int>(p);
    return o == 1;
  };
  Subgroup sub = trivial_subgroup();
  while (sub.order() < q) {
    // a p-element of the normalizer outside the subgroup extends it
    Subgroup norm = normalizer(sub);
    bool extended = false;
    for (int g : norm.elements) {
      if (g == 0 || sub.contains(g) || !p_power_order(g)) continue;
      std::vector<int> gens = sub.elements;
      gens.push_back(g);
      Subgroup bigger = generated_subgroup(gens);
      if (bigger.order() % p != 0) continue;
      std::size_t o = bigger.order(), pp = 1;
      while (o % p == 0) {
        o /= p;
        pp *= p;
      }
      if (o == 1) {  // still a p-group
        sub = bigger;
        extended = true;
        break;
      }
      (void)pp;
    }
    check_internal(extended, "Sylow extension step failed");
  }
  return sub;
}

std::vector<std::uint64_t> FiniteGroup::prime_divisors() const {
  std::vector<std::uint64_t> primes;
  std::size_t n = order();
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  return primes;
}

std::string FiniteGroup::structure_summary() const {
  std::ostringstream os;
  os << "order " << order() << ", " << (is_abelian() ? "abelian" : "nonabelian")
     << ", exponent " << exponent();
  return os.str();
}

GroupPtr enumerate_elements(const GroupSpec& spec) {
  // validate and normalize generators
  bool have_perm = false, have_mat = false;
  std::size_t perm_deg = 0, mat_dim = 0;
  for (const auto& g : spec.generators) {
    check(g.perm.has_value() != g.matrix.has_value(), ErrorKind::validation,
          "generator must be exactly one of permutation or matrix");
    if (g.perm) {
      have_perm = true;
      perm_deg = std::max(perm_deg, g.perm->size());
      std::vector<int> sorted = *g.perm;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i)
        check(sorted[i] == static_cast<int>(i), ErrorKind::validation,
              "permutation generator is not a bijection");
    } else {
      have_mat = true;
      check(g.matrix->rows() == g.matrix->cols(), ErrorKind::validation,
            "matrix generator is not square");
      if (mat_dim == 0) mat_dim = g.matrix->rows();
      check(g.matrix->rows() == mat_dim, ErrorKind::validation,
            "matrix generators of mixed dimension");
      Int d = g.matrix->det();
      check(d == 1 || d == -1, ErrorKind::validation,
            "matrix generator does not have determinant +-1");
    }
  }
  check(!(have_perm && have_mat), ErrorKind::validation,
        "cannot mix permutation and matrix generators");

  bool use_perm = !have_mat;
  ConcreteElem id;
  id.is_perm = use_perm;
  if (use_perm) {
    id.perm.resize(std::max<std::size_t>(perm_deg, 1));
    std::iota(id.perm.begin(), id.perm.end(), 0);
  } else {
    id.mat = IntMatrix::identity(mat_dim);
  }

  std::vector<ConcreteElem> gens;
  for (const auto& g : spec.generators) {
    ConcreteElem e;
    e.is_perm = use_perm;
    if (use_perm) {
      e.perm = *g.perm;
      e.perm.resize(perm_deg);
      for (std::size_t i = g.perm->size(); i < perm_deg; ++i)
        e.perm[i] = static_cast<int>(i);
    } else {
      e.mat = *g.matrix;
    }
    gens.push_back(std::move(e));
  }

  std::vector<ConcreteElem> elems{id};
  std::map<std::string, int> index{{id.key(), 0}};
  for (std::size_t qi = 0; qi < elems.size(); ++qi)
    for (const auto& g : gens) {
      ConcreteElem prod = mul_concrete(elems[qi], g);
      std::string k = prod.key();
      if (!index.count(k)) {
        check(elems.size() < spec.order_cap, ErrorKind::cap,
              "group order cap exceeded");
        index[k] = static_cast<int>(elems.size());
        elems.push_back(std::move(prod));
      }
    }

  std::size_t n = elems.size();
  std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      cayley[a][b] = index.at(mul_concrete(elems[a], elems[b]).key());

  std::vector<int> gen_idx;
  for (const auto& g : gens) gen_idx.push_back(index.at(g.key()));
  return std::make_shared<FiniteGroup>(std::move(cayley), std::move(gen_idx));
}

GroupPtr subgroup_as_group(const FiniteGroup& g, const Subgroup& h,
                           std::vector<int>& embed) {
  check(h.contains(0), ErrorKind::validation, "subgroup without identity");
  embed = h.elements;  // sorted, so identity lands at index 0
  std::size_t n = embed.size();
  std::map<int, int> back;
  for (std::size_t i = 0; i < n; ++i) back[embed[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = back.find(g.mul(embed[a], embed[b]));
      check(it != back.end(), ErrorKind::validation,
            "element set is not closed under multiplication");
      cayley[a][b] = it->second;
    }
  std::vector<int> gens;
  for (std::size_t i = 1; i < n; ++i) gens.push_back(static_cast<int>(i));
  return std::make_shared<FiniteGroup>(std::move(cayley), std::move(gens));
}

GroupSpec cyclic_spec(int n) {
  GroupSpec spec;
  if (n > 1) {
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    spec.generators.push_back(Generator{cyc, std::nullopt});
  }
  return spec;
}

GroupSpec symmetric3_spec() {
  GroupSpec spec;
  spec.generators.push_back(Generator{std::vector<int>{1, 0, 2}, std::nullopt});
  spec.generators.push_back(Generator{std::vector<int>{1, 2, 0}, std::nullopt});
  return spec;
}

GroupSpec klein_four_matrix_spec() {
  GroupSpec spec;
  spec.generators.push_back(
      Generator{std::nullopt, IntMatrix::from_rows({{-1, 0}, {0, 1}})});
  spec.generators.push_back(
      Generator{std::nullopt, IntMatrix::from_rows({{1, 0}, {0, -1}})});
  return spec;
}

}  // namespace holo
