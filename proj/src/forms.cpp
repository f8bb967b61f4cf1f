#include "hc/forms.hpp"

#include <random>

#include "hc/morita.hpp"

namespace hc {

namespace {

MatD block_diagonal(const std::vector<MatD>& blocks) {
  Eigen::Index n = 0;
  for (const auto& b : blocks) n += b.rows();
  MatD out = MatD::Zero(n, n);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.block(at, at, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return out;
}

void require_same_algebra(const HermitianForm& h1, const HermitianForm& h2) {
  if (!(h1.algebra() == h2.algebra())) {
    throw Error(ErrorCode::InvalidDescriptor, "forms live over different algebras with involution");
  }
}

// lambda if x = lambda I, lambda in F.
std::optional<FieldElem> as_central_scalar(const MatD& x) {
  if (x.rows() == 0 || !x(0, 0).is_central()) return std::nullopt;
  const FieldElem lambda = x(0, 0).coord(0);
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      const DElem& e = x(i, j);
      if (i == j ? !(e.is_central() && e.coord(0) == lambda) : !e.is_zero()) return std::nullopt;
    }
  }
  return lambda;
}

// Small positive rationals ordered by height, used as trial coordinates.
const std::vector<Rational>& trial_values() {
  static const std::vector<Rational> values = [] {
    std::vector<Rational> v;
    for (int height = 2; height <= 9; ++height) {
      for (int p = 1; p < height; ++p) {
        const int q = height - p;
        Rational r(p, q);
        r.canonicalize();
        if (r.get_num() == p) v.push_back(r);
      }
    }
    return v;
  }();
  return values;
}

// y in D with Nrd(y) = q, trying a square root first and then one or two
// nonscalar coordinates set to small trial values.
std::optional<DElem> represent_by_norm(const DivisionAlgebra& D, const FieldElem& q, int budget) {
  if (q.is_zero()) return DElem(D.scalar(FieldElem(0)));
  const FieldDesc& F = D.base();
  if (auto r = field_sqrt(q, F)) return D.scalar(*r);
  if (D.kind() == DivisionKind::split) return std::nullopt;

  const auto& desc = D.desc();
  // Nrd coefficients of the nonscalar coordinates.
  std::vector<FieldElem> weights;
  if (D.kind() == DivisionKind::quad) {
    weights = {desc.p};
  } else {
    weights = {desc.p, desc.q, desc.p * desc.q};
  }
  const auto& trials = trial_values();
  const int limit = std::min<int>(budget * 4, static_cast<int>(trials.size()));
  for (size_t w = 0; w < weights.size(); ++w) {
    for (int t = 0; t < limit; ++t) {
      FieldElem rest = q - weights[w] * FieldElem(trials[static_cast<size_t>(t)] * trials[static_cast<size_t>(t)]);
      if (auto r = field_sqrt(rest, F)) {
        std::vector<FieldElem> c(static_cast<size_t>(D.dim()));
        c[0] = *r;
        c[w + 1] = FieldElem(trials[static_cast<size_t>(t)]);
        return D.elem(c);
      }
    }
  }
  if (D.kind() == DivisionKind::quat) {
    const int small = std::min(limit, 8);
    for (int s = 0; s < small; ++s) {
      for (int t = 0; t < small; ++t) {
        const Rational& x1 = trials[static_cast<size_t>(s)];
        const Rational& x2 = trials[static_cast<size_t>(t)];
        FieldElem rest = q - weights[0] * FieldElem(x1 * x1) - weights[1] * FieldElem(x2 * x2);
        if (auto r = field_sqrt(rest, F)) return D.elem({*r, FieldElem(x1), FieldElem(x2), FieldElem(0)});
      }
    }
  }
  return std::nullopt;
}

struct Assignment {
  Eigen::Index index;
  DElem y;
};

// Writes target = sum b_i Nrd(y_i) over at most `depth` unused indices. All
// but the last y_i are small rational trial values.
std::optional<std::vector<Assignment>> represent_value(const DivisionAlgebra& D, const FieldElem& target,
                                                       const std::vector<FieldElem>& b,
                                                       std::vector<bool>& used, int budget, int depth) {
  // one unused index per distinct value of b
  std::vector<size_t> candidates;
  for (size_t i = 0; i < b.size(); ++i) {
    if (used[i] || b[i].is_zero()) continue;
    bool fresh = true;
    for (size_t c : candidates) fresh = fresh && b[c] != b[i];
    if (fresh) candidates.push_back(i);
  }
  for (size_t i : candidates) {
    if (auto y = represent_by_norm(D, target / b[i], budget)) {
      used[i] = true;
      return std::vector<Assignment>{{static_cast<Eigen::Index>(i), *y}};
    }
  }
  if (depth <= 1) return std::nullopt;
  const auto& trials = trial_values();
  const int limit = std::min({budget, 6, static_cast<int>(trials.size())});
  for (size_t i : candidates) {
    used[i] = true;
    for (int t = 0; t < limit; ++t) {
      const Rational& x = trials[static_cast<size_t>(t)];
      auto rest = represent_value(D, target - b[i] * FieldElem(x * x), b, used, budget, depth - 1);
      if (rest) {
        rest->push_back({static_cast<Eigen::Index>(i), D.scalar(FieldElem(x))});
        return rest;
      }
    }
    used[i] = false;
  }
  return std::nullopt;
}

}  // namespace

HermitianForm::HermitianForm(AlgebraWithInvolution algebra, MatD gram)
    : algebra_(std::move(algebra)), gram_(std::move(gram)) {
  const int ell = algebra_.ell();
  if (gram_.rows() != gram_.cols() || gram_.rows() % ell != 0) {
    throw Error(ErrorCode::DimensionMismatch, "Gram matrix must be square of size a multiple of ell");
  }
  const int k = rank();
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      if (block(j, i) != algebra_.sigma(block(i, j))) {
        throw Error(ErrorCode::NotHermitian, "Gram block (" + std::to_string(j) + "," + std::to_string(i) +
                                                 ") is not sigma of block (" + std::to_string(i) + "," +
                                                 std::to_string(j) + ")");
      }
    }
  }
}

HermitianForm HermitianForm::zero(const AlgebraWithInvolution& algebra, int rank) {
  const int n = rank * algebra.ell();
  return HermitianForm(algebra, MatD::Zero(n, n));
}

MatD HermitianForm::block(int i, int j) const {
  const int ell = algebra_.ell();
  return gram_.block(i * ell, j * ell, ell, ell);
}

MatD HermitianForm::evaluate(const MatD& x, const MatD& y) const {
  const int ell = algebra_.ell();
  if (x.rows() != gram_.rows() || y.rows() != gram_.rows() || x.cols() != ell || y.cols() != ell) {
    throw Error(ErrorCode::DimensionMismatch, "vectors must be (k ell) x ell");
  }
  MatD out = algebra_.zero();
  for (int i = 0; i < rank(); ++i) {
    const MatD sx = algebra_.sigma(x.middleRows(i * ell, ell));
    for (int j = 0; j < rank(); ++j) {
      out += mul(mul(sx, block(i, j)), MatD(y.middleRows(j * ell, ell)));
    }
  }
  return out;
}

int QuadraticFormF::signature(OrderingId P) const {
  int s = 0;
  for (const auto& e : entries) s += sign_at(e, P);
  return s;
}

HermitianForm diag_sigma(const AlgebraWithInvolution& algebra, const std::vector<MatD>& elements) {
  for (const auto& a : elements) {
    algebra.require_element(a);
    if (!algebra.is_symmetric(a)) throw Error(ErrorCode::NotSymmetric, "diagonal entry is not sigma-symmetric");
  }
  return HermitianForm(algebra, block_diagonal(elements));
}

HermitianForm direct_sum(const HermitianForm& h1, const HermitianForm& h2) {
  require_same_algebra(h1, h2);
  return HermitianForm(h1.algebra(), block_diagonal({h1.gram(), h2.gram()}));
}

HermitianForm copies(const HermitianForm& h, int m) {
  return HermitianForm(h.algebra(), block_diagonal(std::vector<MatD>(static_cast<size_t>(m), h.gram())));
}

HermitianForm tensor(const QuadraticFormF& q, const HermitianForm& h) {
  std::vector<MatD> blocks;
  blocks.reserve(q.entries.size());
  for (const auto& u : q.entries) blocks.push_back(scale(h.gram(), u));
  return HermitianForm(h.algebra(), block_diagonal(blocks));
}

HermitianForm scale(const MatD& c, const HermitianForm& h) {
  const auto& A = h.algebra();
  A.require_element(c);
  if (!A.is_symmetric(c)) throw Error(ErrorCode::NotSymmetric, "scaling element is not sigma-symmetric");
  if (!is_invertible(c)) throw Error(ErrorCode::Singular, "scaling element is not invertible");
  if (auto lambda = as_central_scalar(c)) return tensor(QuadraticFormF{{*lambda}}, h);

  const int ell = A.ell();
  const int n = static_cast<int>(h.gram().rows());
  MatD gram(n, n);
  for (int i = 0; i < h.rank(); ++i) {
    gram.middleRows(i * ell, ell) = mul(c, h.gram().middleRows(i * ell, ell));
  }
  return HermitianForm(A.with_phi(mul(c, A.phi())), std::move(gram));
}

DiagonalizationResult diagonalize(const HermitianForm& h, PivotStrategy strategy) {
  return diagonalize(full_reduction(h).gram(), strategy);
}

NonsingularPart nonsingular_part(const HermitianForm& h) {
  const auto& A = h.algebra();
  const int ell = A.ell();
  const auto dz = diagonalize(h);
  const int r = dz.rank();
  const int blocks = (r + ell - 1) / ell;

  MatD flat = MatD::Zero(blocks * ell, blocks * ell);
  for (int i = 0; i < r; ++i) flat(i, i) = DElem(dz.entries[static_cast<size_t>(i)]);
  const HermitianForm expanded = expand(HermitianForm(A.base_algebra(), flat), ell);

  MatD gram = expanded.gram();
  for (int i = 0; i < blocks; ++i) {
    gram.middleRows(i * ell, ell) = mul(A.phi(), MatD(expanded.gram().middleRows(i * ell, ell)));
  }
  return NonsingularPart{HermitianForm(A, std::move(gram)), h.rank() - blocks, r};
}

std::vector<MatD> morita_diag_rep(const HermitianForm& h) {
  const auto& A = h.algebra();
  std::vector<MatD> out;
  for (const auto& d : diagonalize(h).entries) out.push_back(scale(A.phi(), d));
  return out;
}

std::optional<WeakRepresentation> weakly_represents(const HermitianForm& h, const MatD& u, int budget,
                                                    std::uint64_t seed) {
  const auto& A = h.algebra();
  A.require_element(u);
  if (!A.is_symmetric(u)) throw Error(ErrorCode::NotSymmetric, "target is not sigma-symmetric");
  if (budget < 1) budget = 1;
  const int ell = A.ell();
  const auto& D = A.division();
  const auto n = static_cast<Eigen::Index>(h.gram().rows());

  if (is_zero_matrix(u) && n > 0) return WeakRepresentation{1, MatD::Zero(n, ell)};
  if (n == 0) return std::nullopt;

  // Target and form, both reduced to diagonal shape over (D, theta).
  const auto target = diagonalize(MatD(mul(A.phi_inv(), u)));
  const MatD target_inv = mat_inv(target.witness);
  const auto form = diagonalize(h);

  const int depth = D.dim() == 4 ? 2 : D.dim() == 2 ? 3 : 4;
  const int max_copies = std::min(budget, depth * ell);
  for (int m = 1; m <= max_copies; ++m) {
    std::vector<FieldElem> b;
    for (int c = 0; c < m; ++c) b.insert(b.end(), form.entries.begin(), form.entries.end());
    std::vector<bool> used(b.size(), false);

    MatD y = MatD::Zero(m * n, ell);
    bool ok = true;
    for (int c = 0; c < ell && ok; ++c) {
      const FieldElem& want = target.entries[static_cast<size_t>(c)];
      if (want.is_zero()) continue;
      auto parts = represent_value(D, want, b, used, budget, depth);
      if (!parts) {
        ok = false;
        break;
      }
      for (const auto& p : *parts) y(p.index, c) = p.y;
    }
    if (!ok) continue;

    MatD g_m = MatD::Zero(m * n, m * n);
    for (int c = 0; c < m; ++c) g_m.block(c * n, c * n, n, n) = form.witness;
    MatD x = mul(mul(g_m, y), target_inv);
    const HermitianForm hm = copies(h, m);
    if (hm.evaluate(x, x) == u) return WeakRepresentation{m, std::move(x)};
  }

  // Unstructured probes: small random vectors of h itself.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-2, 2);
  for (int attempt = 0; attempt < budget; ++attempt) {
    MatD x(n, ell);
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      std::vector<FieldElem> c(static_cast<size_t>(D.dim()));
      for (auto& v : c) v = FieldElem(coord(rng));
      x.data()[i] = D.elem(c);
    }
    if (h.evaluate(x, x) == u) return WeakRepresentation{1, std::move(x)};
  }
  return std::nullopt;
}

}  // namespace hc
