#include "verify.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "hc/cones.hpp"
#include "hc/morita.hpp"
#include "hc/sampling.hpp"
#include "hc/zoo.hpp"
#include "oracles.hpp"

namespace hc::verify {

namespace {

// Counts exact checks; a single failure fails the criterion.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) fail(what);
  }
  void fail(const std::string& what) {
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  template <typename F>
  void guard(const std::string& where, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      ++checks_;
      fail(where + ": " + e.what());
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }

  CriterionResult result(int id, const std::string& title, double seconds) const {
    std::ostringstream d;
    d << "checks=" << checks_ << " failures=" << failures_ << " tolerance=0 (exact)";
    if (!notes_.empty()) d << ", " << notes_;
    if (!first_.empty()) d << "; first failure: " << first_;
    return {id, title, failures_ == 0 && checks_ > 0, d.str(), seconds};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
  std::string notes_;
};

std::uint64_t mix(std::uint64_t seed, int criterion, int entry) {
  return seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(criterion) * 1000003ULL +
         static_cast<std::uint64_t>(entry);
}

MatF central_part(const MatD& x) {
  MatF out(x.rows(), x.cols());
  for (Eigen::Index i = 0; i < x.size(); ++i) out.data()[i] = x.data()[i].coord(0);
  return out;
}

struct SignCount {
  int pos = 0;
  int neg = 0;
  bool operator==(const SignCount&) const = default;
};

SignCount count_signs(const std::vector<FieldElem>& entries, OrderingId P) {
  SignCount c;
  for (const auto& e : entries) {
    const int s = sign_at(e, P);
    c.pos += s > 0;
    c.neg += s < 0;
  }
  return c;
}

std::string at(const ZooEntry& z, OrderingId P) { return z.name + " at " + P.name(); }

template <typename Body>
CriterionResult timed(int id, const std::string& title, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  body(t);
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  return t.result(id, title, dt.count());
}

CriterionResult diagonalization_soundness(std::uint64_t seed) {
  return timed(1, "diagonalization soundness", [&](Tally& t) {
    const int per_algebra = 300;
    for (size_t e = 0; e < zoo().size(); ++e) {
      const auto& z = zoo()[e];
      const auto& D = z.algebra.division();
      const int ell = z.algebra.ell();
      Sampler rng(mix(seed, 1, static_cast<int>(e)));
      for (int s = 0; s < per_algebra; ++s) {
        const int k = ell == 1 ? rng.integer(1, 3) : rng.integer(1, 2);
        const MatD H = rng.hermitian(D, k * ell);
        t.guard(z.name, [&] {
          const auto first = diagonalize(H, PivotStrategy::first);
          const auto last = diagonalize(H, PivotStrategy::last);
          t.check(oracle::congruence_holds(H, first.witness, first.entries), z.name + ": congruence (first pivot)");
          t.check(oracle::congruence_holds(H, last.witness, last.entries), z.name + ": congruence (last pivot)");
          t.check(is_invertible(first.witness) && is_invertible(last.witness), z.name + ": witness invertible");
          bool trailing = true;
          for (size_t i = 1; i < first.entries.size(); ++i) {
            trailing = trailing && !(first.entries[i - 1].is_zero() && !first.entries[i].is_zero());
          }
          t.check(trailing, z.name + ": zero entries trail");
          t.check(first.rank() == last.rank(), z.name + ": rank depends on pivot order");
          for (const auto& info : classify_all(z.algebra)) {
            if (info.nil) continue;
            t.check(count_signs(first.entries, info.P) == count_signs(last.entries, info.P),
                    at(z, info.P) + ": Sylvester counts depend on pivot order");
          }
        });
      }
    }
    t.note("matrices/algebra=" + std::to_string(per_algebra) + ", algebras=" + std::to_string(zoo().size()));
  });
}

CriterionResult going_up_down(std::uint64_t seed) {
  return timed(2, "going up / going down round trip", [&](Tally& t) {
    const int per_algebra = 200;
    for (size_t e = 0; e < zoo().size(); ++e) {
      const auto& z = zoo()[e];
      const auto& D = z.algebra.division();
      const int ell = z.algebra.ell();
      const auto T = AlgebraWithInvolution::transpose_type(D, ell);
      const auto base = T.base_algebra();
      Sampler rng(mix(seed, 2, static_cast<int>(e)));
      t.guard(z.name, [&] {
        for (const auto& Kd : enumerate_cones(base)) {
          t.check(trace_down(psd_up(Kd, ell)) == Kd, z.name + ": Tr(PSD(K)) != K");
        }
        for (const auto& K : enumerate_cones(T)) {
          t.check(psd_up(trace_down(K), ell) == K, z.name + ": PSD(Tr(K)) != K");
        }
      });
      for (int s = 0; s < per_algebra; ++s) {
        const MatD B = rng.hermitian(D, ell);
        const FieldElem d = rng.field_elem(D.base());
        std::vector<MatD> probes;
        for (int p = 0; p < 3; ++p) probes.push_back(rng.matrix(D, ell, 1));
        t.guard(z.name, [&] {
          const auto dz = diagonalize(B);
          for (const auto& Kd : enumerate_cones(base)) {
            const PositiveCone K = psd_up(Kd, ell);
            const bool in_K = member(B, K);
            bool entries_in = true;
            for (const auto& x : dz.entries) entries_in = entries_in && member(base.scalar(x), Kd);
            t.check(in_K == entries_in, z.name + ": B in PSD(K) vs diagonal entries in K");

            bool compressions_in = true;
            std::vector<MatD> xs = probes;
            for (int c = 0; c < ell; ++c) xs.push_back(dz.witness.col(c));
            for (const auto& x : xs) {
              compressions_in = compressions_in && member(mul(mul(theta_t(x), B), x), Kd);
            }
            t.check(in_K == compressions_in, z.name + ": B in PSD(K) vs compressions in K");

            MatD corner = T.zero();
            corner(0, 0) = DElem(d);
            t.check(member(base.scalar(d), Kd) == member(corner, K), z.name + ": d in K vs diag(d,0,..) in PSD(K)");
            t.check(member(corner, K) == member(base.scalar(d), trace_down(K)), z.name + ": trace_down membership");
          }
        });
      }
    }
    t.note("matrices/algebra=" + std::to_string(per_algebra));
  });
}

CriterionResult signature_laws(std::uint64_t seed) {
  return timed(3, "signature laws", [&](Tally& t) {
    const int per_algebra = 200;
    for (size_t e = 0; e < zoo().size(); ++e) {
      const auto& z = zoo()[e];
      const auto& A = z.algebra;
      Sampler rng(mix(seed, 3, static_cast<int>(e)));
      for (int s = 0; s < per_algebra; ++s) {
        const HermitianForm h = rng.form(A, rng.integer(1, 2));
        const HermitianForm h2 = rng.form(A, 1);
        const MatD a = rng.symmetric_invertible(A);
        const QuadraticFormF q = rng.quadratic_form(A.field(), rng.integer(1, 2));
        t.guard(z.name, [&] {
          const HermitianForm hyp = diag_sigma(A, {a, MatD(-a)});
          const HermitianForm sum = direct_sum(h, h2);
          const HermitianForm tq = tensor(q, h);
          for (auto P : orderings(A.field())) {
            const int sh = sign_eta(h, P);
            t.check(sign_eta(hyp, P) == 0, at(z, P) + ": hyperbolic form has nonzero signature");
            t.check(sign_eta(direct_sum(h, hyp), P) == sh, at(z, P) + ": Witt invariance");
            t.check(sign_eta(sum, P) == sh + sign_eta(h2, P), at(z, P) + ": additivity");
            t.check(sign_eta(tq, P) == q.signature(P) * sh, at(z, P) + ": multiplicativity");
          }
        });
      }
    }
    t.note("instances/algebra=" + std::to_string(per_algebra));
  });
}

CriterionResult m_p_equals_n_p(std::uint64_t seed) {
  return timed(4, "m_P = n_P", [&](Tally& t) {
    const int per_algebra = 500;
    int nil_orderings = 0;
    for (size_t e = 0; e < zoo().size(); ++e) {
      const auto& z = zoo()[e];
      const auto& A = z.algebra;
      const auto& D = A.division();
      Sampler rng(mix(seed, 4, static_cast<int>(e)));
      const auto infos = classify_all(A);
      for (const auto& info : infos) {
        nil_orderings += info.nil;
        if (info.nil) continue;
        t.guard(at(z, info.P), [&] {
          const auto m = m_P(A, info.P);
          t.check(m.value == info.n_P, at(z, info.P) + ": m_P != n_P");
          t.check(A.is_symmetric(m.witness) && is_invertible(m.witness), at(z, info.P) + ": witness not symmetric invertible");
          t.check(sign_eta(diag_sigma(A, {m.witness}), info.P) == info.n_P, at(z, info.P) + ": witness signature");
          t.check(oracle::transfer_signature(D, mul(A.phi_inv(), m.witness), info.P) == info.n_P,
                  at(z, info.P) + ": witness transfer signature");
        });
      }
      for (int s = 0; s < per_algebra; ++s) {
        const MatD a = rng.symmetric_invertible(A);
        t.guard(z.name, [&] {
          const HermitianForm h = diag_sigma(A, {a});
          const MatD flat = mul(A.phi_inv(), a);
          for (const auto& info : infos) {
            const int sig = sign_eta(h, info.P);
            const int ref = oracle::transfer_signature(D, flat, info.P);
            if (info.nil) {
              t.check(sig == 0 && ref == 0, at(z, info.P) + ": nonzero signature at a nil ordering");
            } else {
              t.check(std::abs(sig) <= info.n_P, at(z, info.P) + ": signature exceeds n_P");
              t.check(sig == ref, at(z, info.P) + ": signature disagrees with the transfer oracle");
            }
          }
        });
      }
    }
    t.note("elements/algebra=" + std::to_string(per_algebra) + ", nil orderings=" + std::to_string(nil_orderings));
  });
}

CriterionResult psd_cones(std::uint64_t seed) {
  return timed(5, "cones on (M_n(Q), t) are +-PSD", [&](Tally& t) {
    const int per_algebra = 500;
    int singular = 0;
    for (int n = 1; n <= 3; ++n) {
      const auto A = AlgebraWithInvolution::transpose_type(DivisionAlgebra::split(FieldDesc::rationals()), n);
      const auto cones = enumerate_cones(A);
      t.check(cones.size() == 2, "M_" + std::to_string(n) + "(Q): expected exactly two cones");
      Sampler rng(mix(seed, 5, n));
      for (int s = 0; s < per_algebra; ++s) {
        const MatD u = s % 3 == 0 ? rng.symmetric_singular(A) : rng.symmetric(A);
        const MatF m = central_part(u);
        if (oracle::determinant(m).is_zero()) ++singular;
        t.guard("M_" + std::to_string(n), [&] {
          for (const auto& K : cones) {
            const bool psd = oracle::psd_by_minors(K.eps > 0 ? m : MatF(-m), K.P);
            t.check(member(u, K) == psd, "M_" + std::to_string(n) + "(Q) " + K.name() + ": member vs principal minors");
          }
        });
      }
    }
    t.check(singular >= 100, "fewer than 100 singular samples");
    t.note("matrices/size=" + std::to_string(per_algebra) + " for n=1,2,3, singular=" + std::to_string(singular));
  });
}

CriterionResult positive_involutions(std::uint64_t seed) {
  return timed(6, "positive involutions", [&](Tally& t) {
    const int per_nil = 200;
    for (size_t e = 0; e < zoo().size(); ++e) {
      const auto& z = zoo()[e];
      const auto& A = z.algebra;
      Sampler rng(mix(seed, 6, static_cast<int>(e)));
      for (const auto& info : classify_all(A)) {
        const OrderingId P = info.P;
        if (!info.nil) {
          t.guard(at(z, P), [&] {
            const auto pi = positive_involution_at(A, P);
            t.check(oracle::psd_by_elimination(oracle::trace_gram(A, pi.b), P), at(z, P) + ": trace form not PSD");
            const MatD b_inv = mat_inv(pi.b);
            t.check(std::abs(sign_eta(diag_sigma(A, {b_inv}), P)) == info.n_P, at(z, P) + ": |sign <b^-1>| != n_P");
            t.check(std::abs(oracle::transfer_signature(A.division(), mul(A.phi_inv(), b_inv), P)) == info.n_P,
                    at(z, P) + ": transfer signature of <b^-1>");
          });
          continue;
        }
        t.guard(at(z, P), [&] {
          bool threw = false;
          try {
            (void)positive_involution_at(A, P);
          } catch (const Error& err) {
            threw = err.code() == ErrorCode::NilOrdering;
          }
          t.check(threw, at(z, P) + ": expected NilOrdering");
        });
        for (int s = 0; s < per_nil; ++s) {
          const MatD b = rng.symmetric_invertible(A);
          t.guard(at(z, P), [&] {
            t.check(!oracle::psd_by_elimination(oracle::trace_gram(A, b), P), at(z, P) + ": PSD trace form at a nil ordering");
            t.check(!is_positive_involution(A, b, P), at(z, P) + ": positive involution at a nil ordering");
          });
        }
      }
    }
    t.note("random b per nil ordering=" + std::to_string(per_nil));
  });
}

CriterionResult pre_sylvester_inertia(std::uint64_t seed) {
  return timed(7, "pre-Sylvester decomposition and inertia", [&](Tally& t) {
    const int per_algebra = 100;
    int algebras = 0;
    for (size_t e = 0; e < zoo().size(); ++e) {
      const auto& z = zoo()[e];
      const auto& A = z.algebra;
      if (!A.is_transpose_type()) continue;
      ++algebras;
      Sampler rng(mix(seed, 7, static_cast<int>(e)));
      const auto xt = x_tilde(A);
      for (int s = 0; s < per_algebra; ++s) {
        const HermitianForm h = rng.nonsingular_form(A, rng.integer(1, 2));
        for (auto P : xt) {
          t.guard(at(z, P), [&] {
            const auto first = pre_sylvester(h, P, PivotStrategy::first);
            const auto last = pre_sylvester(h, P, PivotStrategy::last);
            t.check(first.r == last.r && first.s == last.s, at(z, P) + ": (r, s) depends on the construction");
            t.check(first.r + first.s == h.rank() * A.ell() * A.ell(), at(z, P) + ": r + s != rank bookkeeping");
            for (int eps : {1, -1}) {
              const PositiveCone K{A, P, eps};
              const int expected = eps * sign_eta(h, P);
              t.check(sylvester_sign(first, K) == expected, at(z, P) + ": (r-s)/(n_P t) != eps sign_eta");
              t.check(sign_cone(h, K) == expected, at(z, P) + ": sign_cone");
            }
          });
        }
      }
    }
    t.note("forms/algebra=" + std::to_string(per_algebra) + ", theta^t algebras=" + std::to_string(algebras));
  });
}

CriterionResult cone_axioms(std::uint64_t seed) {
  return timed(8, "cone axioms on samples", [&](Tally& t) {
    const int sample_size = 300;
    int cones = 0;
    for (size_t e = 0; e < zoo().size(); ++e) {
      const auto& z = zoo()[e];
      const auto& A = z.algebra;
      for (const auto& K : enumerate_cones(A)) {
        ++cones;
        t.guard(at(z, K.P), [&] {
          const MatD gen = scale(m_P(A, K.P).witness, FieldElem(K.eps));
          const auto sample = gen_cone_sample(A, {gen}, K.P, sample_size, mix(seed, 8, static_cast<int>(e)) + static_cast<std::uint64_t>(K.eps + 1));
          t.check(static_cast<int>(sample.elements.size()) == sample_size, at(z, K.P) + ": sample size");
          int inside = 0;
          for (const auto& u : sample.elements) inside += member(u, K);
          t.check(inside == sample_size, z.name + " " + K.name() + ": sample element outside the cone");
          t.check(!properness_check(sample).has_value(), z.name + " " + K.name() + ": sample not proper");
        });
      }
    }
    const auto M2 = AlgebraWithInvolution::transpose_type(DivisionAlgebra::split(FieldDesc::rationals()), 2);
    t.guard("improper generator", [&] {
      const auto sample = gen_cone_sample(M2, {diag_matrix({1, -1})}, OrderingId{0}, sample_size, mix(seed, 8, 99));
      const auto w = properness_check(sample);
      t.check(w.has_value() && !is_zero_matrix(*w), "{diag(1,-1)} yields no witness");
    });
    t.note("sample size=" + std::to_string(sample_size) + ", cones=" + std::to_string(cones));
  });
}

std::vector<std::vector<OrderingId>> subsets(const std::vector<OrderingId>& xs) {
  std::vector<std::vector<OrderingId>> out;
  for (unsigned mask = 0; mask < (1u << xs.size()); ++mask) {
    std::vector<OrderingId> y;
    for (size_t i = 0; i < xs.size(); ++i) {
      if (mask & (1u << i)) y.push_back(xs[i]);
    }
    out.push_back(std::move(y));
  }
  return out;
}

CriterionResult max_q(std::uint64_t seed) {
  return timed(9, "maximality on Harrison subsets", [&](Tally& t) {
    const int per_algebra = 100;
    int maximal_seen = 0;
    for (size_t e = 0; e < zoo().size(); ++e) {
      const auto& z = zoo()[e];
      const auto& A = z.algebra;
      Sampler rng(mix(seed, 9, static_cast<int>(e)));
      const auto xt = x_tilde(A);
      const auto Ys = subsets(xt);
      t.guard(z.name, [&] { t.check(is_maximal_on(A, A.phi(), xt), z.name + ": Phi not maximal on x_tilde"); });
      for (auto P : orderings(A.field())) {
        if (std::find(xt.begin(), xt.end(), P) != xt.end()) continue;
        bool threw = false;
        try {
          (void)is_maximal_on(A, A.phi(), {P});
        } catch (const Error& err) {
          threw = err.code() == ErrorCode::OrderingNotInXTilde;
        }
        t.check(threw, at(z, P) + ": expected OrderingNotInXTilde");
      }
      for (int s = 0; s < per_algebra; ++s) {
        MatD u;
        do {
          switch (s % 4) {
            case 0: u = rng.symmetric(A); break;
            case 1: {
              const MatD x = rng.matrix(A.division(), A.ell(), A.ell());
              u = mul(mul(A.sigma(x), A.phi()), x);
              break;
            }
            case 2: u = -rng.symmetric_invertible(A); break;
            default: u = A.ell() > 1 ? rng.symmetric_singular(A) : rng.symmetric(A); break;
          }
        } while (is_zero_matrix(u));
        t.guard(z.name, [&] {
          for (const auto& Y : Ys) {
            const auto c = max_q_check(A, u, Y);
            maximal_seen += c.maximal && !Y.empty();
            t.check(c.consistent(), z.name + ": maximality and cone agreement differ");
          }
        });
      }
    }
    t.note("elements/algebra=" + std::to_string(per_algebra) + ", reference=Phi, nonempty-Y maximal cases=" +
           std::to_string(maximal_seen));
  });
}

CriterionResult one_positive(std::uint64_t) {
  return timed(10, "three-way positivity equivalence for sigma", [&](Tally& t) {
    int orderings_seen = 0;
    for (const auto& z : zoo()) {
      const auto& A = z.algebra;
      for (const auto& info : classify_all(A)) {
        ++orderings_seen;
        t.guard(at(z, info.P), [&] {
          const MatD one = A.identity();
          bool in_some_cone = false;
          for (const auto& K : enumerate_cones(A)) in_some_cone = in_some_cone || (K.P == info.P && member(one, K));
          const bool maximal = std::abs(sign_eta(diag_sigma(A, {one}), info.P)) == info.n_P;
          const bool psd = oracle::psd_by_elimination(oracle::trace_gram(A, one), info.P);
          t.check(in_some_cone == maximal && maximal == psd, at(z, info.P) + ": the three conditions differ");
          t.check(is_positive_involution(A, one, info.P) == psd, at(z, info.P) + ": is_positive_involution");
        });
      }
    }
    t.note("orderings=" + std::to_string(orderings_seen));
  });
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "diagonalization soundness", diagonalization_soundness},
      {2, "going up / going down round trip", going_up_down},
      {3, "signature laws", signature_laws},
      {4, "m_P = n_P", m_p_equals_n_p},
      {5, "cones on (M_n(Q), t) are +-PSD", psd_cones},
      {6, "positive involutions", positive_involutions},
      {7, "pre-Sylvester decomposition and inertia", pre_sylvester_inertia},
      {8, "cone axioms on samples", cone_axioms},
      {9, "maximality on Harrison subsets", max_q},
      {10, "three-way positivity equivalence for sigma", one_positive},
  };
  return all;
}

std::vector<CriterionResult> run_all(std::uint64_t seed, const std::vector<int>& only) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    out.push_back(c.run(seed));
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << "  " << r.title << "  (" << r.detail << ")";
  return s.str();
}

}  // namespace hc::verify
