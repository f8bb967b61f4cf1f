#include "oracles.hpp"

namespace hc::oracle {

FieldElem determinant(const MatF& m) {
  const auto n = m.rows();
  if (n == 0) return FieldElem(1);
  if (n == 1) return m(0, 0);
  FieldElem det;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    MatF minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      for (Eigen::Index c = 0, k = 0; c < n; ++c) {
        if (c != j) minor(r - 1, k++) = m(r, c);
      }
    }
    const FieldElem term = m(0, j) * determinant(minor);
    det = j % 2 == 0 ? det + term : det - term;
  }
  return det;
}

bool psd_by_minors(const MatF& m, OrderingId P) {
  const auto n = m.rows();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    const auto k = static_cast<Eigen::Index>(idx.size());
    MatF sub(k, k);
    for (Eigen::Index r = 0; r < k; ++r) {
      for (Eigen::Index c = 0; c < k; ++c) sub(r, c) = m(idx[static_cast<size_t>(r)], idx[static_cast<size_t>(c)]);
    }
    if (sign_at(determinant(sub), P) < 0) return false;
  }
  return true;
}

bool psd_by_elimination(const MatF& m, OrderingId P) {
  MatF w = m;
  const auto n = w.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const int s = sign_at(w(k, k), P);
    if (s < 0) return false;
    if (s == 0) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        if (!w(k, j).is_zero()) return false;
      }
      continue;
    }
    const FieldElem inv = w(k, k).inverse();
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (w(i, k).is_zero()) continue;
      const FieldElem f = w(i, k) * inv;
      for (Eigen::Index j = k + 1; j < n; ++j) w(i, j) -= f * w(k, j);
    }
  }
  return true;
}

std::vector<FieldElem> characteristic_polynomial(const MatF& m) {
  // Faddeev-LeVerrier
  const auto n = m.rows();
  std::vector<FieldElem> c(static_cast<size_t>(n + 1));
  c[static_cast<size_t>(n)] = FieldElem(1);
  MatF mk = MatF::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    MatF next = MatF::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        FieldElem acc;
        for (Eigen::Index l = 0; l < n; ++l) {
          if (!m(i, l).is_zero() && !mk(l, j).is_zero()) acc += m(i, l) * mk(l, j);
        }
        next(i, j) = acc;
      }
      next(i, i) += c[static_cast<size_t>(n - k + 1)];
    }
    mk = std::move(next);
    FieldElem tr;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index l = 0; l < n; ++l) {
        if (!m(i, l).is_zero() && !mk(l, i).is_zero()) tr += m(i, l) * mk(l, i);
      }
    }
    c[static_cast<size_t>(n - k)] = -tr / FieldElem(k);
  }
  return c;
}

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int symmetric_signature(const MatF& m, OrderingId P) {
  const auto c = characteristic_polynomial(m);
  std::vector<int> plus, minus;
  for (size_t i = 0; i < c.size(); ++i) {
    const int s = sign_at(c[i], P);
    plus.push_back(s);
    minus.push_back(i % 2 == 0 ? s : -s);
  }
  return sign_changes(plus) - sign_changes(minus);
}

MatF transfer_gram(const DivisionAlgebra& D, const MatD& B) {
  const auto n = B.rows();
  const int dim = D.dim();
  const auto N = n * dim;
  auto value = [&](const std::vector<DElem>& x) {
    DElem acc(0);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) acc += theta(x[static_cast<size_t>(i)]) * B(i, j) * x[static_cast<size_t>(j)];
    }
    return acc.coord(0);
  };
  auto basis_vector = [&](Eigen::Index a) {
    std::vector<DElem> x(static_cast<size_t>(n), D.scalar(FieldElem(0)));
    x[static_cast<size_t>(a / dim)] = D.basis(static_cast<int>(a % dim));
    return x;
  };
  MatF g(N, N);
  std::vector<FieldElem> diag(static_cast<size_t>(N));
  for (Eigen::Index a = 0; a < N; ++a) diag[static_cast<size_t>(a)] = value(basis_vector(a));
  for (Eigen::Index a = 0; a < N; ++a) {
    g(a, a) = diag[static_cast<size_t>(a)];
    for (Eigen::Index b = a + 1; b < N; ++b) {
      auto x = basis_vector(a);
      const auto y = basis_vector(b);
      x[static_cast<size_t>(b / dim)] += y[static_cast<size_t>(b / dim)];
      const FieldElem v = (value(x) - diag[static_cast<size_t>(a)] - diag[static_cast<size_t>(b)]) / FieldElem(2);
      g(a, b) = v;
      g(b, a) = v;
    }
  }
  return g;
}

int transfer_signature(const DivisionAlgebra& D, const MatD& B, OrderingId P) {
  const int s = symmetric_signature(transfer_gram(D, B), P);
  if (s % D.dim() != 0) {
    throw Error(ErrorCode::InternalInvariantViolation, "transfer signature is not a multiple of dim D");
  }
  return s / D.dim();
}

MatF trace_gram(const AlgebraWithInvolution& A, const MatD& b) {
  const auto& D = A.division();
  const int ell = A.ell();
  const MatD left = naive_product(b, A.phi());
  const MatD right = naive_product(A.phi_inv(), mat_inv(b));
  auto tau = [&](const MatD& x) {
    MatD t(ell, ell);
    for (int i = 0; i < ell; ++i) {
      for (int j = 0; j < ell; ++j) t(i, j) = theta(x(j, i));
    }
    return naive_product(naive_product(left, t), right);
  };
  auto trd = [&](const MatD& y) {
    DElem acc(0);
    for (int i = 0; i < ell; ++i) acc += D.kind() == DivisionKind::quat ? y(i, i) + theta(y(i, i)) : y(i, i);
    return acc.coord(0);
  };
  std::vector<MatD> basis;
  for (int m = 0; m < D.dim(); ++m) {
    for (int r = 0; r < ell; ++r) {
      for (int c = 0; c < ell; ++c) {
        MatD e = MatD::Constant(ell, ell, D.scalar(FieldElem(0)));
        e(r, c) = D.basis(m);
        basis.push_back(e);
      }
    }
  }
  const auto N = static_cast<Eigen::Index>(basis.size());
  MatF g(N, N);
  for (Eigen::Index a = 0; a < N; ++a) {
    for (Eigen::Index c = a; c < N; ++c) {
      // Trd(tau(x) y) + Trd(tau(y) x), halved
      const MatD& x = basis[static_cast<size_t>(a)];
      const MatD& y = basis[static_cast<size_t>(c)];
      const FieldElem v = (trd(naive_product(tau(x), y)) + trd(naive_product(tau(y), x))) / FieldElem(2);
      g(a, c) = v;
      g(c, a) = v;
    }
  }
  return g;
}

MatD naive_product(const MatD& x, const MatD& y) {
  if (x.cols() != y.rows()) throw Error(ErrorCode::DimensionMismatch, "naive_product shapes");
  MatD out(x.rows(), y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < y.cols(); ++j) {
      DElem acc(0);
      for (Eigen::Index k = 0; k < x.cols(); ++k) acc += x(i, k) * y(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

bool congruence_holds(const MatD& H, const MatD& G, const std::vector<FieldElem>& entries) {
  const auto n = H.rows();
  if (G.rows() != n || G.cols() != n || static_cast<Eigen::Index>(entries.size()) != n) return false;
  MatD gt(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) gt(i, j) = theta(G(j, i));
  }
  const MatD prod = naive_product(naive_product(gt, H), G);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const DElem want = i == j ? DElem(entries[static_cast<size_t>(i)]) : DElem(0);
      if (!(prod(i, j) - want).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace hc::oracle
