#include "homcalc/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace homcalc {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  std::ostringstream os;
  os << "(" << i << "," << j << "," << k << ")";
  return os.str();
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

}  // namespace

Vec Algebra::basis_vector(std::size_t i) const {
  Vec v(dim(), 0);
  v[i] = 1 % prime();
  return v;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  const std::size_t d = dim();
  const std::uint32_t p = prime();
  Vec out(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (!y[j]) continue;
      const std::uint32_t s = fp::mul(x[i], y[j], p);
      const std::uint32_t* c = &data_.structure_constants[(i * d + j) * d];
      for (std::size_t k = 0; k < d; ++k)
        if (c[k]) out[k] = fp::add(out[k], fp::mul(s, c[k], p), p);
    }
  }
  return out;
}

Matrix Algebra::left_mult_by(const Vec& x) const {
  Matrix m(prime(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (x[i]) m = m + left_[i].scaled(x[i]);
  return m;
}

Matrix Algebra::right_mult_by(const Vec& x) const {
  Matrix m(prime(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (x[i]) m = m + right_[i].scaled(x[i]);
  return m;
}

bool Algebra::same_structure(const Algebra& o) const {
  return data_.field_char == o.data_.field_char && data_.dim == o.data_.dim &&
         data_.structure_constants == o.data_.structure_constants && data_.unit == o.data_.unit &&
         data_.idempotents == o.data_.idempotents && radical_ == o.radical_;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && a->same_structure(*b));
}

void Algebra::build_caches() {
  const std::size_t d = dim();
  const std::uint32_t p = prime();
  left_.assign(d, Matrix(p, d, d));
  right_.assign(d, Matrix(p, d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const std::uint32_t c = constant(i, j, k);
        if (!c) continue;
        left_[i].set(k, j, c);   // b_i b_j
        right_[j].set(k, i, c);  // b_i b_j seen as (b_i) * b_j
      }
  radical_ = column_space_basis(Matrix::from_columns(p, d, data_.radical_basis));

  proj_basis_.clear();
  proj_gen_.clear();
  proj_action_.clear();
  proj_top_.clear();
  for (const auto& e : data_.idempotents) {
    Matrix basis = column_space_basis(right_mult_by(e));
    auto g = solve(basis, Matrix::column(p, e));
    proj_gen_.push_back(g->column_vector(0));
    std::vector<Matrix> act;
    for (std::size_t k = 0; k < d; ++k) act.push_back(*solve(basis, left_[k] * basis));
    proj_action_.push_back(std::move(act));
    // J e_i = J * (A e_i): image of radical elements acting on the basis.
    EchelonSpan rad_part(p, d);
    for (std::size_t r = 0; r < radical_.cols(); ++r) {
      const Matrix lm = left_mult_by(radical_.column_vector(r)) * basis;
      for (std::size_t c = 0; c < lm.cols(); ++c) rad_part.insert(lm.column_vector(c));
    }
    proj_top_.push_back(basis.cols() - rad_part.dim());
    proj_basis_.push_back(std::move(basis));
  }

  // Idempotents plus a lift of a basis of J/J^2 usually generate; fall back
  // to adding basis vectors until the generated subalgebra is everything.
  generators_ = data_.idempotents;
  {
    std::vector<Vec> rad_vecs;
    for (std::size_t c = 0; c < radical_.cols(); ++c) rad_vecs.push_back(radical_.column_vector(c));
    EchelonSpan sq(p, d);
    for (const auto& x : rad_vecs)
      for (const auto& y : rad_vecs) sq.insert(multiply(x, y));
    for (const auto& x : rad_vecs)
      if (sq.insert(x)) generators_.push_back(x);
  }
  auto closure_dim = [&](const std::vector<Vec>& gens) {
    EchelonSpan span(p, d);
    std::vector<Vec> frontier;
    auto add = [&](const Vec& v) {
      if (span.insert(v)) frontier.push_back(v);
    };
    add(data_.unit);
    for (const auto& g : gens) add(g);
    std::vector<Vec> all = frontier;
    while (!frontier.empty()) {
      std::vector<Vec> next;
      std::swap(next, frontier);
      for (const auto& x : next)
        for (const auto& g : gens) {
          Vec y = multiply(g, x);
          if (span.insert(y)) {
            frontier.push_back(y);
          }
        }
    }
    return span.dim();
  };
  for (std::size_t i = 0; closure_dim(generators_) < d && i < d; ++i) generators_.push_back(basis_vector(i));
}

AlgebraPtr validate_algebra(AlgebraData raw) {
  const std::uint32_t p = raw.field_char;
  const std::size_t d = raw.dim;
  if (p > fp::kMaxPrime || !fp::is_prime(p))
    throw Error(ErrorCode::NotPrime, "field characteristic " + std::to_string(p) + " is not a supported prime");
  if (raw.structure_constants.size() != d * d * d)
    throw Error(ErrorCode::ValidationError, "structure constant tensor must be d x d x d", "structure_constants");
  if (raw.basis_labels.empty())
    for (std::size_t i = 0; i < d; ++i) raw.basis_labels.push_back("b" + std::to_string(i));
  if (raw.basis_labels.size() != d)
    throw Error(ErrorCode::ValidationError, "basis label count differs from dim", "basis_labels");
  auto check_len = [&](const Vec& v, const std::string& where) {
    if (v.size() != d) throw Error(ErrorCode::ValidationError, "coordinate vector of wrong length", where);
  };
  for (auto& c : raw.structure_constants) c %= p;
  check_len(raw.unit, "unit");
  for (std::size_t i = 0; i < raw.idempotents.size(); ++i) check_len(raw.idempotents[i], "idempotents/" + std::to_string(i));
  for (std::size_t i = 0; i < raw.radical_basis.size(); ++i) check_len(raw.radical_basis[i], "radical_basis/" + std::to_string(i));
  if (raw.idempotents.empty()) throw Error(ErrorCode::BadIdempotents, "at least one idempotent is required");

  auto c = [&](std::size_t i, std::size_t j, std::size_t k) { return raw.structure_constants[(i * d + j) * d + k]; };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t m = 0; m < d; ++m) {
          // ((b_i b_j) b_k)_m versus (b_i (b_j b_k))_m
          std::uint64_t lhs = 0, rhs = 0;
          for (std::size_t l = 0; l < d; ++l) {
            lhs = (lhs + std::uint64_t{c(i, j, l)} * c(l, k, m)) % p;
            rhs = (rhs + std::uint64_t{c(j, k, l)} * c(i, l, m)) % p;
          }
          if (lhs != rhs)
            throw Error(ErrorCode::NonAssociative, "associativity fails on basis triple " + triple(i, j, k), triple(i, j, k));
        }

  std::shared_ptr<Algebra> a(new Algebra(std::move(raw)));
  // Temporary caches for products; rebuilt after the checks.
  a->left_.clear();
  const Vec& u = a->data_.unit;
  for (std::size_t j = 0; j < d; ++j) {
    const Vec b = a->basis_vector(j);
    if (a->multiply(u, b) != b || a->multiply(b, u) != b)
      throw Error(ErrorCode::BadUnit, "unit is not a two-sided identity at basis element " + std::to_string(j),
                  std::to_string(j));
  }
  const auto& es = a->data_.idempotents;
  Vec sum(d, 0);
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t k = 0; k < d; ++k) sum[k] = fp::add(sum[k], es[i][k], p);
    for (std::size_t j = 0; j < es.size(); ++j) {
      const Vec prod = a->multiply(es[i], es[j]);
      const Vec expect = i == j ? es[i] : Vec(d, 0);
      if (prod != expect || (i == j && is_zero(es[i])))
        throw Error(ErrorCode::BadIdempotents,
                    "e_i e_j != delta_ij e_i for pair (" + std::to_string(i) + "," + std::to_string(j) + ")",
                    "(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  if (sum != u) throw Error(ErrorCode::BadIdempotents, "idempotents do not sum to the unit", "sum");

  const Matrix rad = column_space_basis(Matrix::from_columns(p, d, a->data_.radical_basis));
  std::vector<Vec> rad_vecs;
  for (std::size_t k = 0; k < rad.cols(); ++k) rad_vecs.push_back(rad.column_vector(k));
  {
    EchelonSpan span(p, d);
    for (const auto& r : rad_vecs) span.insert(r);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < rad_vecs.size(); ++k) {
        const Vec b = a->basis_vector(i);
        if (!span.contains(a->multiply(b, rad_vecs[k])) || !span.contains(a->multiply(rad_vecs[k], b)))
          throw Error(ErrorCode::RadicalNotIdeal,
                      "radical is not a two-sided ideal at (basis " + std::to_string(i) + ", radical " + std::to_string(k) + ")",
                      "(" + std::to_string(i) + "," + std::to_string(k) + ")");
      }
  }
  // J^k for k = 1..d; J^d must vanish.
  std::vector<Vec> power = rad_vecs;
  for (std::size_t k = 1; k < std::max<std::size_t>(d, 1) && !power.empty(); ++k) {
    EchelonSpan next(p, d);
    std::vector<Vec> nb;
    for (const auto& x : power)
      for (const auto& y : rad_vecs) {
        Vec z = a->multiply(x, y);
        if (next.insert(z)) nb.push_back(std::move(z));
      }
    power = std::move(nb);
  }
  if (!power.empty())
    throw Error(ErrorCode::RadicalNotNilpotent, "J^" + std::to_string(d) + " is nonzero", std::to_string(d));

  a->build_caches();
  return a;
}

AlgebraPtr opposite_algebra(const AlgebraPtr& a) {
  {
    std::lock_guard lock(a->opposite_mutex_);
    if (auto cached = a->opposite_.lock()) return cached;
  }
  AlgebraData od = a->data();
  const std::size_t d = od.dim;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) od.structure_constants[(i * d + j) * d + k] = a->constant(j, i, k);
  const std::string suffix = "^op";
  if (od.name.size() >= suffix.size() && od.name.compare(od.name.size() - suffix.size(), suffix.size(), suffix) == 0)
    od.name.resize(od.name.size() - suffix.size());
  else
    od.name += suffix;
  std::shared_ptr<Algebra> op(new Algebra(std::move(od)));
  op->build_caches();
  std::lock_guard lock(a->opposite_mutex_);
  if (auto cached = a->opposite_.lock()) return cached;
  op->opposite_ = a;
  a->opposite_ = op;
  return op;
}

// ---------------------------------------------------------------------------
// Quiver frontend

namespace {

struct Path {
  std::vector<std::size_t> arrows;  // traversal order
  std::size_t source = 0;
  std::size_t target = 0;
  bool operator<(const Path& o) const {
    return std::tie(arrows, source, target) < std::tie(o.arrows, o.source, o.target);
  }
};

}  // namespace

AlgebraPtr algebra_from_quiver(const QuiverPresentation& q, std::size_t basis_cap) {
  const std::uint32_t p = q.field_char;
  if (p > fp::kMaxPrime || !fp::is_prime(p)) throw Error(ErrorCode::NotPrime, "field characteristic is not prime");
  const std::size_t L = q.nilpotency_bound;
  if (L < 2) throw Error(ErrorCode::ValidationError, "nilpotency bound must be at least 2", "nilpotency_bound");
  const std::size_t nv = q.vertices.size();
  if (nv == 0) throw Error(ErrorCode::ValidationError, "quiver has no vertices", "vertices");

  std::map<std::string, std::size_t> vertex_index, arrow_index;
  for (std::size_t v = 0; v < nv; ++v)
    if (!vertex_index.emplace(q.vertices[v], v).second)
      throw Error(ErrorCode::ValidationError, "duplicate vertex " + q.vertices[v], "vertices/" + std::to_string(v));
  std::vector<std::size_t> src, tgt;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& ar = q.arrows[a];
    auto s = vertex_index.find(ar.source), t = vertex_index.find(ar.target);
    if (s == vertex_index.end() || t == vertex_index.end())
      throw Error(ErrorCode::ValidationError, "arrow " + ar.label + " has an unknown endpoint", "arrows/" + std::to_string(a));
    if (!arrow_index.emplace(ar.label, a).second)
      throw Error(ErrorCode::ValidationError, "duplicate arrow label " + ar.label, "arrows/" + std::to_string(a));
    src.push_back(s->second);
    tgt.push_back(t->second);
  }

  // Paths by length, up to L-1.
  std::vector<std::vector<Path>> paths(L);
  for (std::size_t v = 0; v < nv; ++v) paths[0].push_back({{}, v, v});
  const std::size_t raw_cap = 16 * basis_cap;
  for (std::size_t len = 1; len < L; ++len) {
    for (const auto& pth : paths[len - 1])
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (src[a] != pth.target) continue;
        Path np = pth;
        if (len == 1) np.source = src[a];
        np.arrows.push_back(a);
        np.target = tgt[a];
        paths[len].push_back(std::move(np));
        if (paths[len].size() > raw_cap)
          throw Error(ErrorCode::PathExplosion, "more than " + std::to_string(raw_cap) + " paths of length " + std::to_string(len));
      }
    std::sort(paths[len].begin(), paths[len].end());
  }

  // Relations as parsed paths.
  struct Rel {
    std::vector<std::pair<Path, std::uint32_t>> terms;
    std::size_t length;
  };
  std::vector<Rel> rels;
  for (std::size_t r = 0; r < q.relations.size(); ++r) {
    Rel rel{{}, 0};
    const std::string loc = "relations/" + std::to_string(r);
    for (std::size_t t = 0; t < q.relations[r].size(); ++t) {
      const auto& term = q.relations[r][t];
      if (term.path.size() < 2)
        throw Error(ErrorCode::RelationNotLengthHomogeneous, "relation terms must have length >= 2", loc);
      Path pth;
      for (std::size_t k = 0; k < term.path.size(); ++k) {
        auto it = arrow_index.find(term.path[k]);
        if (it == arrow_index.end()) throw Error(ErrorCode::ValidationError, "unknown arrow " + term.path[k], loc);
        const std::size_t a = it->second;
        if (k == 0) pth.source = src[a];
        else if (src[a] != pth.target)
          throw Error(ErrorCode::ValidationError, "relation path is not composable", loc);
        pth.arrows.push_back(a);
        pth.target = tgt[a];
      }
      if (t == 0) rel.length = pth.arrows.size();
      else if (pth.arrows.size() != rel.length)
        throw Error(ErrorCode::RelationNotLengthHomogeneous, "relation mixes path lengths", loc);
      if (t > 0 && (pth.source != rel.terms.front().first.source || pth.target != rel.terms.front().first.target))
        throw Error(ErrorCode::ValidationError, "relation paths are not parallel", loc);
      rel.terms.emplace_back(std::move(pth), fp::reduce(term.coeff, p));
    }
    if (!rel.terms.empty()) rels.push_back(std::move(rel));
  }

  // Per length: rref of the ideal's homogeneous part; non-pivot paths survive.
  struct Layer {
    std::map<Path, std::size_t> index;
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::vector<long> basis_id;  // per path: basis index or -1 if pivot
  };
  std::vector<Layer> layers(L);
  std::size_t basis_size = 0;
  std::vector<Path> basis_paths;
  for (std::size_t len = 0; len < L; ++len) {
    Layer& layer = layers[len];
    const auto& ps = paths[len];
    for (std::size_t i = 0; i < ps.size(); ++i) layer.index.emplace(ps[i], i);
    std::vector<Vec> gens;
    for (const auto& rel : rels) {
      if (rel.length > len) continue;
      const std::size_t slack = len - rel.length;
      const std::size_t rs = rel.terms.front().first.source, rt = rel.terms.front().first.target;
      for (std::size_t a = 0; a <= slack; ++a) {
        const std::size_t b = slack - a;
        for (const auto& u : paths[a]) {
          if (u.target != rs) continue;
          for (const auto& v : paths[b]) {
            if (v.source != rt) continue;
            Vec g(ps.size(), 0);
            for (const auto& [pth, coeff] : rel.terms) {
              Path full;
              full.arrows = u.arrows;
              full.arrows.insert(full.arrows.end(), pth.arrows.begin(), pth.arrows.end());
              full.arrows.insert(full.arrows.end(), v.arrows.begin(), v.arrows.end());
              full.source = a == 0 ? pth.source : u.source;
              full.target = b == 0 ? pth.target : v.target;
              const std::size_t idx = layer.index.at(full);
              g[idx] = fp::add(g[idx], coeff, p);
            }
            gens.push_back(std::move(g));
          }
        }
      }
    }
    Matrix gm = gens.empty() ? Matrix(p, 0, ps.size()) : Matrix::from_columns(p, ps.size(), gens).transpose();
    auto ech = rref(gm);
    layer.reduced = std::move(ech.reduced);
    layer.pivots = std::move(ech.pivot_cols);
    layer.basis_id.assign(ps.size(), -1);
    std::vector<bool> piv(ps.size(), false);
    for (auto c : layer.pivots) piv[c] = true;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (!piv[i]) {
        layer.basis_id[i] = static_cast<long>(basis_size++);
        basis_paths.push_back(ps[i]);
      }
    if (basis_size > basis_cap)
      throw Error(ErrorCode::PathExplosion, "algebra basis exceeds cap " + std::to_string(basis_cap));
  }

  const std::size_t d = basis_size;
  // Normal form of an arbitrary path (length < L) as a coordinate vector.
  auto normal_form = [&](const Path& pth) {
    Vec out(d, 0);
    const Layer& layer = layers[pth.arrows.size()];
    const std::size_t idx = layer.index.at(pth);
    if (layer.basis_id[idx] >= 0) {
      out[static_cast<std::size_t>(layer.basis_id[idx])] = 1;
      return out;
    }
    const std::size_t row = static_cast<std::size_t>(
        std::find(layer.pivots.begin(), layer.pivots.end(), idx) - layer.pivots.begin());
    for (std::size_t c = 0; c < layer.reduced.cols(); ++c) {
      const std::uint32_t x = layer.reduced(row, c);
      if (x && c != idx) out[static_cast<std::size_t>(layer.basis_id[c])] = fp::neg(x, p);
    }
    return out;
  };

  AlgebraData ad;
  ad.name = q.name;
  ad.field_char = p;
  ad.dim = d;
  for (const auto& pth : basis_paths) {
    if (pth.arrows.empty()) {
      ad.basis_labels.push_back("e_" + q.vertices[pth.source]);
      continue;
    }
    std::string label;
    for (auto it = pth.arrows.rbegin(); it != pth.arrows.rend(); ++it) {
      if (!label.empty()) label += "*";
      label += q.arrows[*it].label;
    }
    ad.basis_labels.push_back(label);
  }
  ad.structure_constants.assign(d * d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      // b_i * b_j: traverse b_j first, then b_i.
      const Path& first = basis_paths[j];
      const Path& second = basis_paths[i];
      if (first.target != second.source) continue;
      const std::size_t len = first.arrows.size() + second.arrows.size();
      if (len >= L) continue;
      Path full;
      full.arrows = first.arrows;
      full.arrows.insert(full.arrows.end(), second.arrows.begin(), second.arrows.end());
      full.source = first.source;
      full.target = second.target;
      const Vec nf = normal_form(full);
      for (std::size_t k = 0; k < d; ++k) ad.structure_constants[(i * d + j) * d + k] = nf[k];
    }
  ad.unit.assign(d, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    Vec e(d, 0);
    e[static_cast<std::size_t>(layers[0].basis_id[v])] = 1;
    ad.unit[static_cast<std::size_t>(layers[0].basis_id[v])] = 1;
    ad.idempotents.push_back(std::move(e));
  }
  for (std::size_t k = 0; k < d; ++k)
    if (!basis_paths[k].arrows.empty()) {
      Vec r(d, 0);
      r[k] = 1;
      ad.radical_basis.push_back(std::move(r));
    }
  return validate_algebra(std::move(ad));
}

}  // namespace homcalc
