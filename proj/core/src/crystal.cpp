#include "holonomy/crystal.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "holonomy/error.hpp"

namespace holo {

AffinePair affine_mul(const AffinePair& x, const AffinePair& y) {
  return AffinePair{x.linear * y.linear,
                    x.linear * y.translation + x.translation};
}

AffinePair affine_inverse(const AffinePair& x) {
  RatMatrix inv = x.linear.inverse();
  RatVec t = inv * x.translation;
  for (Rat& v : t) v = -v;
  return AffinePair{std::move(inv), std::move(t)};
}

bool affine_eq(const AffinePair& x, const AffinePair& y) {
  return x.linear == y.linear && x.translation == y.translation;
}

CrystalGroup::CrystalGroup(GLattice l, Cochain2 f)
    : lattice_(std::move(l)), f_(std::move(f)) {
  check(f_.size() == cochain2_size(lattice_.group(), lattice_.rank()),
        ErrorKind::validation, "cochain has wrong length");
  check(is_cocycle(f_, lattice_), ErrorKind::validation,
        "cochain is not a cocycle");
}

IntVec CrystalGroup::cocycle_value(int a, int b) const {
  return cochain2_value(f_, lattice_.group(), lattice_.rank(), a, b);
}

CrystalGroup::Element CrystalGroup::identity() const {
  return Element{IntVec(rank()), 0};
}

CrystalGroup::Element CrystalGroup::mul(const Element& x,
                                        const Element& y) const {
  Element r;
  r.point = point_group().mul(x.point, y.point);
  IntVec moved = lattice_.act(x.point) * y.translation;
  IntVec f = cocycle_value(x.point, y.point);
  r.translation.resize(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    r.translation[i] = x.translation[i] + moved[i] + f[i];
  return r;
}

CrystalGroup::Element CrystalGroup::inverse(const Element& x) const {
  int pinv = point_group().inv(x.point);
  IntVec f = cocycle_value(pinv, x.point);
  IntVec moved = lattice_.act(pinv) * x.translation;
  Element r;
  r.point = pinv;
  r.translation.resize(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    r.translation[i] = -moved[i] - f[i];
  return r;
}

CrystalGroup::Element CrystalGroup::power(const Element& x, long k) const {
  Element r = identity();
  Element base = k >= 0 ? x : inverse(x);
  long n = k >= 0 ? k : -k;
  for (long i = 0; i < n; ++i) r = mul(r, base);
  return r;
}

bool CrystalGroup::is_identity(const Element& x) const {
  if (x.point != 0) return false;
  return std::all_of(x.translation.begin(), x.translation.end(),
                     [](const Int& v) { return v == 0; });
}

CrystalGroup build_extension(GLattice l, Cochain2 f) {
  return CrystalGroup(std::move(l), std::move(f));
}

std::vector<RatVec> vector_system(const CrystalGroup& gamma) {
  const FiniteGroup& g = gamma.point_group();
  std::size_t n = gamma.rank();
  Rat inv_order = Rat(1) / Rat(static_cast<unsigned long>(g.order()));
  std::vector<RatVec> v(g.order(), RatVec(n));
  for (std::size_t a = 0; a < g.order(); ++a) {
    IntVec sum(n);
    for (std::size_t k = 0; k < g.order(); ++k) {
      IntVec f = gamma.cocycle_value(static_cast<int>(a), static_cast<int>(k));
      for (std::size_t i = 0; i < n; ++i) sum[i] += f[i];
    }
    for (std::size_t i = 0; i < n; ++i) v[a][i] = Rat(sum[i]) * inv_order;
  }
  // v_g + g v_h - v_{gh} = f(g,h), exactly
  const GLattice& l = gamma.lattice();
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      RatVec lhs = v[a] + RatMatrix::from_int(l.act(static_cast<int>(a))) * v[b] -
                   v[g.mul(static_cast<int>(a), static_cast<int>(b))];
      IntVec f = gamma.cocycle_value(static_cast<int>(a), static_cast<int>(b));
      for (std::size_t i = 0; i < n; ++i)
        check_internal(lhs[i] == Rat(f[i]), "vector system equation failed");
    }
  return v;
}

std::optional<TorsionWitness> torsion_search(const CrystalGroup& gamma) {
  const FiniteGroup& g = gamma.point_group();
  std::size_t n = gamma.rank();
  for (std::size_t c = 1; c < g.num_classes(); ++c) {
    int rep = g.class_rep(static_cast<int>(c));
    int p = g.element_order(rep);
    bool prime = p >= 2;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    // iterate the group law symbolically: (m, rep)^p = (A m + b, 1)
    IntMatrix a(n, n);
    IntVec b(n);
    int pw = 0;
    for (int i = 0; i < p; ++i) {
      a = a + gamma.lattice().act(pw);
      IntVec f = gamma.cocycle_value(pw, rep);
      for (std::size_t j = 0; j < n; ++j) b[j] += f[j];
      pw = g.mul(pw, rep);
    }
    IntVec rhs(n);
    for (std::size_t j = 0; j < n; ++j) rhs[j] = -b[j];
    auto sol = solve_integer(a, rhs);
    if (sol) {
      CrystalGroup::Element w{*sol, rep};
      check_internal(gamma.is_identity(gamma.power(w, p)),
                     "torsion witness does not have the claimed order");
      check_internal(!gamma.is_identity(w), "torsion witness is the identity");
      return TorsionWitness{std::move(w), p};
    }
  }
  return std::nullopt;
}

bool is_bieberbach(const CrystalGroup& gamma) {
  return !torsion_search(gamma).has_value();
}

namespace {

std::string rat_key(const Rat& x) { return x.get_str(); }

std::string linear_key(const RatMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) os << rat_key(m.at(i, j)) << ',';
  return os.str();
}

std::string vec_key(const RatVec& v) {
  std::ostringstream os;
  for (const Rat& x : v) os << rat_key(x) << ',';
  return os.str();
}

// Hermite basis of the subgroup of Q^n generated by the given vectors,
// returned as basis rows over Q.
RatMatrix lattice_from_generators(const std::vector<RatVec>& gens,
                                  std::size_t n) {
  RatMatrix m(gens.size(), n);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = gens[i][j];
  Int lcd = m.common_denominator();
  IntMatrix scaled = m.scaled_to_int(lcd);
  HermiteDecomposition h = hermite_normal_form(scaled);
  std::size_t r = h.rank();
  RatMatrix basis(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j)
      basis.at(i, j) = Rat(h.H.at(i, j)) / Rat(lcd);
  return basis;
}

}  // namespace

ExtractedData extract_data(const std::vector<AffinePair>& generators,
                           std::size_t order_cap, std::size_t h2_cap) {
  check(!generators.empty(), ErrorKind::validation, "no generators given");
  std::size_t n = generators[0].linear.rows();
  for (const auto& gen : generators) {
    check(gen.linear.rows() == n && gen.linear.cols() == n &&
              gen.translation.size() == n,
          ErrorKind::validation, "generator dimension mismatch");
    gen.linear.inverse();  // throws when singular
  }

  // closure of the linear parts, with minimal generator words (BFS order)
  std::vector<RatMatrix> linears{RatMatrix::identity(n)};
  std::vector<std::vector<int>> words{{}};
  std::map<std::string, int> index{{linear_key(linears[0]), 0}};
  for (std::size_t qi = 0; qi < linears.size(); ++qi)
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      RatMatrix prod = linears[qi] * generators[gi].linear;
      std::string k = linear_key(prod);
      if (!index.count(k)) {
        check(linears.size() < order_cap, ErrorKind::cap,
              "point group exceeds the order cap");
        index[k] = static_cast<int>(linears.size());
        std::vector<int> w = words[qi];
        w.push_back(static_cast<int>(gi));
        linears.push_back(std::move(prod));
        words.push_back(std::move(w));
      }
    }
  std::size_t order = linears.size();

  // section: affine product along the minimal word
  std::vector<AffinePair> section;
  for (std::size_t e = 0; e < order; ++e) {
    AffinePair s{RatMatrix::identity(n), RatVec(n)};
    for (int gi : words[e]) s = affine_mul(s, generators[gi]);
    section.push_back(std::move(s));
  }

  // translation generators: generator defects relative to the section, plus
  // all cocycle defects of the section, closed under the point-group action
  std::vector<RatVec> tgens;
  std::map<std::string, bool> tseen;
  auto push_vec = [&](const RatVec& v) {
    std::string k = vec_key(v);
    if (!tseen.count(k)) {
      tseen[k] = true;
      tgens.push_back(v);
    }
  };
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    int e = index.at(linear_key(generators[gi].linear));
    push_vec(generators[gi].translation - section[e].translation);
  }
  std::vector<std::vector<int>> mul_table(order, std::vector<int>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      mul_table[a][b] = index.at(linear_key(linears[a] * linears[b]));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      int ab = mul_table[a][b];
      push_vec(section[a].translation + linears[a] * section[b].translation -
               section[ab].translation);
    }
  for (std::size_t round = 0; round < order; ++round) {
    std::size_t before = tgens.size();
    for (std::size_t e = 1; e < order; ++e)
      for (std::size_t i = 0, sz = tgens.size(); i < sz; ++i)
        push_vec(linears[e] * tgens[i]);
    if (tgens.size() == before) break;
  }

  RatMatrix basis_rows = lattice_from_generators(tgens, n);
  check(basis_rows.rows() == n, ErrorKind::validation,
        "pure translations do not span full rank");
  // basis columns and the change to lattice coordinates
  RatMatrix basis_cols(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis_cols.at(j, i) = basis_rows.at(i, j);
  RatMatrix to_lattice = basis_cols.inverse();

  // integral holonomy action in lattice coordinates, generator by generator
  GroupSpec spec;
  spec.order_cap = order_cap;
  std::vector<IntMatrix> gen_action;
  for (const auto& gen : generators) {
    RatMatrix conj = to_lattice * gen.linear * basis_cols;
    IntMatrix m = conj.to_int();
    gen_action.push_back(m);
    spec.generators.push_back(Generator{std::nullopt, std::move(m)});
  }
  GroupPtr point = enumerate_elements(spec);
  // the BFS here and in enumerate_elements visit products in the same order,
  // so element indices agree with `linears`
  check_internal(point->order() == order, "point group order mismatch");
  GLattice lattice(point, n, gen_action);
  for (std::size_t e = 0; e < order; ++e)
    check_internal(RatMatrix::from_int(lattice.act(static_cast<int>(e))) ==
                       to_lattice * linears[e] * basis_cols,
                   "element indexing mismatch between closures");

  Cochain2 f(cochain2_size(*point, n));
  for (std::size_t a = 1; a < order; ++a)
    for (std::size_t b = 1; b < order; ++b) {
      int ab = mul_table[a][b];
      RatVec defect = to_lattice * (section[a].translation +
                                    linears[a] * section[b].translation -
                                    section[ab].translation);
      IntVec value(n);
      for (std::size_t i = 0; i < n; ++i) {
        check_internal(defect[i].get_den() == 1,
                       "section defect outside the translation lattice");
        value[i] = defect[i].get_num();
      }
      cochain2_set(f, *point, n, static_cast<int>(a), static_cast<int>(b),
                   value);
    }

  H2Group cohomology(lattice, h2_cap);
  H2Element alpha = cohomology.reduce(f);
  return ExtractedData{point,        std::move(lattice), std::move(cohomology),
                       std::move(alpha), std::move(f),   basis_cols};
}

}  // namespace holo
