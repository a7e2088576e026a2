// Copyright 2026 The elwq authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "elwq/classifier.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace elwq {

namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string fmt_quaternion(const Quaternion& q) {
  std::ostringstream os;
  os.precision(6);
  os << q[0] << "," << q[1] << "," << q[2] << "," << q[3];
  return os.str();
}

// Diagonal of the best-response matrix when the opponent mixes axis atoms:
// conjugating diag(X) by the (right or left) multiplication matrix of e_b
// permutes the diagonal by the Klein-four xor, d_alpha = sum_b w_b X[b^alpha].
Vec4 axis_mix_diagonal(const std::vector<int>& axes,
                       const std::vector<double>& weights, const Vec4& x) {
  Vec4 d{0, 0, 0, 0};
  for (size_t i = 0; i < axes.size(); ++i)
    for (int a = 0; a < 4; ++a) d[a] += weights[i] * x[axes[i] ^ a];
  return d;
}

MixedStrategy two_atom(double w1, const Quaternion& q1, double w2,
                       const Quaternion& q2) {
  return MixedStrategy(std::vector<WeightedAtom>{{w1, q1}, {w2, q2}});
}

}  // namespace

std::vector<double> default_rho_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 49; ++i) g.push_back(0.02 * i);
  return g;
}

OracleResult epsilon_nash_oracle(const MixedStrategy& mu,
                                 const MixedStrategy& nu,
                                 const ClassicalPayoffs& payoffs,
                                 const OracleConfig& cfg) {
  CanonicalStrategy cmu = canonicalize(mu);
  CanonicalStrategy cnu = canonicalize(nu);
  Mat4 y = best_response_matrix_A(cnu, payoffs).M;
  Mat4 z = best_response_matrix_B(cmu, payoffs).M;
  auto current = mixed_payoff(mu, nu, payoffs);

  std::vector<Quaternion> grid = sphere_grid(cfg.grid_size, cfg.seed);
  double best_a = -1e300, best_b = -1e300;
  for (const Quaternion& g : grid) {
    best_a = std::max(best_a, quad_form(y, g.c));
    best_b = std::max(best_b, quad_form(z, g.c));
  }

  OracleResult res;
  res.gain_a = best_a - current.first;
  res.gain_b = best_b - current.second;
  res.epsilon_used = cfg.epsilon;
  double h = covering_radius_estimate(grid, cfg.covering_samples, cfg.seed);
  res.epsilon_bound =
      2.0 * h * (payoffs.max_entry() - payoffs.min_entry());
  res.ok = res.gain_a <= cfg.epsilon && res.gain_b <= cfg.epsilon;
  return res;
}

// ---------------------------------------------------------------- N = 1

CaseResult classify_N1(const ClassicalPayoffs& payoffs,
                       const OracleConfig& oracle_cfg) {
  CaseResult res;
  res.label = "N1";

  GenericityReport gen = genericity_check(payoffs);
  if (!gen.generic)
    res.notes.push_back("warning: payoffs are not generic; argmax chains may "
                        "be ambiguous");

  const Vec4& x = payoffs.X;
  int argmax = 0;
  for (int a = 1; a < 4; ++a)
    if (x[a] > x[argmax]) argmax = a;

  // By the stability symmetry Bob can be pinned to e0; Alice's best-response
  // matrix is then diag(X), so her only best responses are +-e_argmax.
  Quaternion alice = Quaternion::basis(argmax);
  Quaternion bob = Quaternion::basis(0);

  for (int a = 0; a < 4; ++a) {
    MixedStrategy mu = MixedStrategy::point(Quaternion::basis(a));
    NashReport rep = verify_nash(mu, MixedStrategy::point(bob), payoffs);
    ScanRow row;
    row.case_label = res.label;
    row.params = "alice_axis=" + std::to_string(a);
    row.gap = x[argmax] - x[a];  // Alice's loss from not playing the argmax
    row.residual_a = rep.residual_a;
    row.residual_b = rep.residual_b;
    row.verdict = rep.verdict;
    res.scan.push_back(row);
  }

  Finding f;
  f.description =
      "Alice's unique best response to pure play is the axis of the largest "
      "payoff entry (index " +
      std::to_string(argmax) + "); Bob's consistency is checked against it";
  f.mu = MixedStrategy::point(alice);
  f.nu = MixedStrategy::point(bob);
  f.report = verify_nash(f.mu, f.nu, payoffs);
  f.oracle = epsilon_nash_oracle(f.mu, f.nu, payoffs, oracle_cfg);
  f.has_oracle = true;
  res.findings.push_back(f);

  res.summary = f.report.verdict
                    ? "pure equilibrium found at (e" + std::to_string(argmax) +
                          ", e0)"
                    : "no (.,1) equilibrium: Bob's best response leaves e0";
  return res;
}

// ------------------------------------------------------------- N2 axis

namespace {

// Alice response family inside span{e_a, e_b} against Bob's axis mix; checks
// Bob-side consistency and returns the verified finding when it works.
std::optional<Finding> resolve_axis_family(const ClassicalPayoffs& payoffs,
                                           int k, double rho, int a, int b,
                                           const OracleConfig& oracle_cfg) {
  // sigma = 1/2 branch, theta sampled across the orbit.
  const Quaternion ea = Quaternion::basis(a), eb = Quaternion::basis(b);
  MixedStrategy nu = two_atom(rho, Quaternion::basis(0), 1.0 - rho,
                              Quaternion::basis(k));
  bool all_true = true;
  NashReport representative;
  for (int i = 0; i < 13; ++i) {
    double theta = std::numbers::pi * i / 13.0;
    Quaternion u1 = add(scale(ea, std::cos(theta)), scale(eb, std::sin(theta)));
    Quaternion u2 =
        add(scale(ea, -std::sin(theta)), scale(eb, std::cos(theta)));
    NashReport rep = verify_nash(two_atom(0.5, u1, 0.5, u2), nu, payoffs);
    if (i == 0) representative = rep;
    all_true = all_true && rep.verdict;
  }
  if (!all_true) return std::nullopt;

  Finding f;
  f.description = "two-atom family: Alice spans {e" + std::to_string(a) +
                  ",e" + std::to_string(b) + "} (any O(2) angle), Bob plays "
                  "{e0,e" + std::to_string(k) + "} with rho=" + fmt_double(rho);
  Quaternion u1 = ea, u2 = eb;
  f.mu = two_atom(0.5, u1, 0.5, u2);
  f.nu = nu;
  f.report = representative;
  f.oracle = epsilon_nash_oracle(f.mu, f.nu, payoffs, oracle_cfg);
  f.has_oracle = true;
  return f;
}

}  // namespace

CaseResult classify_N2_axis(const ClassicalPayoffs& payoffs,
                            const OracleConfig& oracle_cfg) {
  CaseResult res;
  res.label = "N2-axis";
  res.notes.push_back(
      "axis atoms of either sign give identical second moments; signs are "
      "quotiented out");
  const Vec4& x = payoffs.X;

  for (int k = 1; k <= 3; ++k) {
    // Y diagonal: d_alpha(rho) = rho X_alpha + (1-rho) X_{k xor alpha}.
    // Solve every pairwise crossing and keep those that top the diagonal.
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        double c0 = x[k ^ a] - x[k ^ b];
        double c1 = (x[a] - x[k ^ a]) - (x[b] - x[k ^ b]);
        if (c1 == 0.0) continue;
        double rho = -c0 / c1;
        if (!(rho > 0.0 && rho < 1.0)) continue;
        Vec4 d;
        for (int g = 0; g < 4; ++g) d[g] = rho * x[g] + (1 - rho) * x[k ^ g];
        double top = *std::max_element(d.begin(), d.end());
        bool is_top = d[a] >= top - 1e-12;

        ScanRow row;
        row.case_label = res.label;
        row.params = "axis=" + std::to_string(k) + ";pair=" +
                     std::to_string(a) + std::to_string(b) +
                     ";rho=" + fmt_double(rho);
        row.gap = top - d[a];
        row.verdict = false;
        if (is_top) {
          auto f = resolve_axis_family(payoffs, k, rho, a, b, oracle_cfg);
          if (f.has_value()) {
            row.verdict = true;
            row.residual_a = f->report.residual_a;
            row.residual_b = f->report.residual_b;
            res.findings.push_back(*f);
          } else {
            // Record the failed Bob-side check for the crossing.
            MixedStrategy mu = two_atom(0.5, Quaternion::basis(a), 0.5,
                                        Quaternion::basis(b));
            MixedStrategy nu = two_atom(rho, Quaternion::basis(0), 1.0 - rho,
                                        Quaternion::basis(k));
            NashReport rep = verify_nash(mu, nu, payoffs);
            row.residual_a = rep.residual_a;
            row.residual_b = rep.residual_b;
          }
        }
        res.scan.push_back(row);
      }
  }

  res.summary = res.findings.empty()
                    ? "no axis-supported two-atom equilibrium"
                    : std::to_string(res.findings.size()) +
                          " axis-supported two-atom famil" +
                          (res.findings.size() == 1 ? "y" : "ies") + " found";
  return res;
}

// ----------------------------------------------------------- N2 case (a)

namespace {

struct BlockIndices {
  int i1, j1, i2, j2;  // block one = {i1,j1}, block two = {i2,j2}
};

// With one imaginary component of q pinned to zero, Y decomposes into two
// 2x2 blocks; the signed difference of the block maxima drives the
// degenerate-top root finder.
double cross_block_gap(const ClassicalPayoffs& payoffs, int branch, double rho,
                       double t) {
  double c = std::sqrt(1.0 - t), s = std::sqrt(t);
  Quaternion q = branch == 1 ? Quaternion(0, 0, c, s) : Quaternion(0, c, 0, s);
  CanonicalStrategy nu;
  nu.probs = {rho, 1.0 - rho};
  nu.supports = {Quaternion::basis(0), q};
  Mat4 y = best_response_matrix_A(nu, payoffs).M;
  BlockIndices bi = branch == 1 ? BlockIndices{0, 1, 2, 3}
                                : BlockIndices{0, 2, 1, 3};
  auto block_top = [&](int i, int j) {
    double mean = 0.5 * (y[i][i] + y[j][j]);
    return mean + std::hypot(0.5 * (y[i][i] - y[j][j]), y[i][j]);
  };
  return block_top(bi.i1, bi.j1) - block_top(bi.i2, bi.j2);
}

}  // namespace

CaseResult classify_N2_caseA(const ClassicalPayoffs& payoffs,
                             const CaseAConfig& cfg_in,
                             const OracleConfig& oracle_cfg) {
  CaseAConfig cfg = cfg_in;
  if (cfg.rho_grid.empty()) cfg.rho_grid = default_rho_grid();

  CaseResult res;
  res.label = "N2-caseA";
  bool any_rho_off_half = false;
  bool axis_recovered = false;
  int consistency_successes = 0;

  for (int branch : {1, 2}) {
    const std::string bname = branch == 1 ? "q1_0" : "q2_0";
    for (double rho : cfg.rho_grid) {
      std::vector<double> g(cfg.t_samples);
      double min_abs = 1e300, max_abs = 0.0;
      for (int i = 0; i < cfg.t_samples; ++i) {
        double t = static_cast<double>(i) / (cfg.t_samples - 1);
        g[i] = cross_block_gap(payoffs, branch, rho, t);
        min_abs = std::min(min_abs, std::abs(g[i]));
        max_abs = std::max(max_abs, std::abs(g[i]));
      }

      ScanRow row;
      row.case_label = res.label;
      row.params = "branch=" + bname + ";rho=" + fmt_double(rho);
      row.gap = min_abs;

      if (max_abs < cfg.plateau_tol) {
        // Whole fiber degenerate: this is the rho = 1/2 plane. The axis
        // point t = 1 (q = e3) reproduces the two-atom axis solution.
        row.verdict = true;
        row.params += ";plateau=1";
        res.scan.push_back(row);
        if (std::abs(rho - 0.5) < 1e-9 && !axis_recovered) {
          axis_recovered = true;
          MixedStrategy mu = two_atom(0.5, Quaternion::basis(1), 0.5,
                                      Quaternion::basis(2));
          MixedStrategy nu = two_atom(0.5, Quaternion::basis(0), 0.5,
                                      Quaternion::basis(3));
          Finding f;
          f.description =
              "rho=1/2: entire t-fiber carries a degenerate top eigenvalue; "
              "the admissible endpoint q=e3 recovers the axis solution";
          f.mu = mu;
          f.nu = nu;
          f.report = verify_nash(mu, nu, payoffs);
          f.oracle = epsilon_nash_oracle(mu, nu, payoffs, oracle_cfg);
          f.has_oracle = true;
          res.findings.push_back(f);
        }
        continue;
      }

      // Bisect every sign change of the gap.
      std::vector<double> roots;
      for (int i = 0; i + 1 < cfg.t_samples; ++i) {
        if (g[i] == 0.0) roots.push_back(i / double(cfg.t_samples - 1));
        if (g[i] * g[i + 1] < 0.0) {
          double lo = i / double(cfg.t_samples - 1);
          double hi = (i + 1) / double(cfg.t_samples - 1);
          double glo = g[i];
          while (hi - lo > 1e-15) {
            double mid = 0.5 * (lo + hi);
            double gm = cross_block_gap(payoffs, branch, rho, mid);
            if (std::abs(gm) < cfg.gap_tol) {
              lo = hi = mid;
              break;
            }
            if (glo * gm < 0)
              hi = mid;
            else {
              lo = mid;
              glo = gm;
            }
          }
          roots.push_back(0.5 * (lo + hi));
        }
      }

      row.verdict = !roots.empty();
      if (roots.empty()) {
        // The documented no-degeneracy outcome for this rho.
        row.params += ";degeneracy=none";
        res.scan.push_back(row);
        continue;
      }
      res.scan.push_back(row);
      if (std::abs(rho - 0.5) >= 1e-9) any_rho_off_half = true;

      // A degenerate-top candidate exists: build Alice's (theta, sigma)
      // response family on the top eigenspace and hunt for Bob-side
      // consistency at the requested resolution.
      for (double t : roots) {
        double c = std::sqrt(1.0 - t), s = std::sqrt(t);
        Quaternion q = branch == 1 ? Quaternion(0, 0, c, s)
                                   : Quaternion(0, c, 0, s);
        CanonicalStrategy cnu;
        cnu.probs = {rho, 1.0 - rho};
        cnu.supports = {Quaternion::basis(0), q};
        EigenspaceReport top_y = maximal_eigenspace(
            best_response_matrix_A(cnu, payoffs), 1e-6);
        if (top_y.top_basis.size() < 2) continue;
        const Vec4& v1 = top_y.top_basis[0];
        const Vec4& v2 = top_y.top_basis[1];
        double best_resid = 1e300;
        int steps_theta =
            static_cast<int>(std::numbers::pi / cfg.consistency_step);
        int steps_sigma = static_cast<int>(1.0 / cfg.consistency_step) - 1;
        for (int it = 0; it < steps_theta; ++it) {
          double theta = it * cfg.consistency_step;
          Vec4 u1 = vec_add(vec_scale(v1, std::cos(theta)),
                            vec_scale(v2, std::sin(theta)));
          Vec4 u2 = vec_add(vec_scale(v1, -std::sin(theta)),
                            vec_scale(v2, std::cos(theta)));
          for (int is = 1; is <= steps_sigma; ++is) {
            double sigma = is * cfg.consistency_step;
            CanonicalStrategy cmu;
            cmu.probs = {sigma, 1.0 - sigma};
            cmu.supports = {Quaternion(u1), Quaternion(u2)};
            EigenspaceReport top_z = maximal_eigenspace(
                best_response_matrix_B(cmu, payoffs));
            double r = std::max(
                eigenspace_residual(top_z, Quaternion::basis(0).c),
                eigenspace_residual(top_z, q.c));
            best_resid = std::min(best_resid, r);
            if (r < 1e-9) ++consistency_successes;
          }
        }
        ScanRow crow;
        crow.case_label = res.label;
        crow.params = "branch=" + bname + ";rho=" + fmt_double(rho) +
                      ";t=" + fmt_double(t) + ";consistency=1";
        crow.gap = 0.0;
        crow.residual_b = best_resid;
        crow.verdict = best_resid < 1e-9;
        res.scan.push_back(crow);
      }
    }
  }

  std::ostringstream sum;
  sum << "degenerate-top solutions "
      << (any_rho_off_half ? "found off rho=1/2; " : "only at rho=1/2; ")
      << (axis_recovered ? "axis solution recovered at rho=1/2; "
                         : "axis solution not in scanned grid; ")
      << consistency_successes << " Bob-consistent (theta,sigma) points";
  res.summary = sum.str();
  return res;
}

// ----------------------------------------------------------- N2 case (b)

CaseResult classify_N2_caseB(const ClassicalPayoffs& payoffs,
                             const std::vector<Quaternion>& q_grid,
                             const OracleConfig& oracle_cfg) {
  CaseResult res;
  res.label = "N2-caseB";
  int skipped_near_axis = 0;
  double worst_commut = 0.0;
  double min_residual = 1e300;

  for (const Quaternion& q : q_grid) {
    // Generic points only: at least two imaginary components well away
    // from zero (the axis case is handled separately below).
    Vec4 mags{std::abs(q[0]), std::abs(q[1]), std::abs(q[2]), std::abs(q[3])};
    std::sort(mags.begin(), mags.end());
    if (mags[2] < 0.1) {
      ++skipped_near_axis;
      continue;
    }

    CanonicalStrategy cnu;
    cnu.probs = {0.5, 0.5};
    cnu.supports = {Quaternion::basis(0), q};
    Mat4 y = best_response_matrix_A(cnu, payoffs).M;
    Mat4 mt = right_mul_matrix(q);
    double commut = mat_frobenius(mat_sub(mat_mul(y, mt), mat_mul(mt, y)));
    worst_commut = std::max(worst_commut, commut);

    EigenspaceReport top_y = maximal_eigenspace({y, Side::kAlice});
    // Top eigenvector with vanishing leading component (the O(2) freedom of
    // the doubly degenerate eigenvalue always allows it).
    Vec4 p1;
    if (top_y.top_basis.size() >= 2) {
      const Vec4& v1 = top_y.top_basis[0];
      const Vec4& v2 = top_y.top_basis[1];
      p1 = vec_add(vec_scale(v1, -v2[0]), vec_scale(v2, v1[0]));
      double n = vec_norm(p1);
      p1 = n > 1e-12 ? vec_scale(p1, 1.0 / n) : v1;
    } else {
      p1 = top_y.top_basis[0];
    }
    // The partner eigenvector is p1 right-multiplied by q.
    Quaternion p1q(p1);
    Quaternion p2 = mul(p1q, q);

    CanonicalStrategy cmu;
    cmu.probs = {0.5, 0.5};
    cmu.supports = {p1q, p2};
    Mat4 z = best_response_matrix_B(cmu, payoffs).M;
    Mat4 ml = left_mul_matrix(q);
    double z_commut = mat_frobenius(mat_sub(mat_mul(z, ml), mat_mul(ml, z)));
    worst_commut = std::max(worst_commut, z_commut);

    EigenspaceReport top_z = maximal_eigenspace({z, Side::kBob});
    double resid = eigenspace_residual(top_z, Quaternion::basis(0).c);
    min_residual = std::min(min_residual, resid);

    ScanRow row;
    row.case_label = res.label;
    row.params = "q=" + fmt_quaternion(q);
    row.gap = top_y.top_gap;
    row.residual_b = resid;
    row.verdict = resid < 1e-9;
    res.scan.push_back(row);
  }

  // The boundary of the case: q with two vanishing imaginary components.
  {
    MixedStrategy mu =
        two_atom(0.5, Quaternion::basis(1), 0.5, Quaternion::basis(2));
    MixedStrategy nu =
        two_atom(0.5, Quaternion::basis(0), 0.5, Quaternion::basis(3));
    Finding f;
    f.description =
        "two vanishing components (q=e3): the axis family is recovered";
    f.mu = mu;
    f.nu = nu;
    f.report = verify_nash(mu, nu, payoffs);
    f.oracle = epsilon_nash_oracle(mu, nu, payoffs, oracle_cfg);
    f.has_oracle = true;
    res.findings.push_back(f);
  }

  std::ostringstream sum;
  sum.precision(4);
  sum << "generic q: min e0-membership residual " << min_residual
      << " (no solution); worst commutation defect " << worst_commut << "; "
      << skipped_near_axis << " near-axis points skipped";
  res.summary = sum.str();
  res.notes.push_back(
      "solutions exist only when two imaginary components of q vanish");
  return res;
}

CaseResult classify_N2_caseB(const ClassicalPayoffs& payoffs) {
  return classify_N2_caseB(payoffs, imaginary_sphere_grid(500, 12345));
}

// --------------------------------------------------------------- M = 3,4

namespace {

CaseResult case_m3(const ClassicalPayoffs& payoffs, uint64_t seed) {
  CaseResult res;
  res.label = "M3";
  const Vec4& x = payoffs.X;
  double worst_min = 1e300;
  int near_axis = 0;

  for (const Quaternion& q : imaginary_sphere_grid(500, seed)) {
    Vec4 mags{std::abs(q[0]), std::abs(q[1]), std::abs(q[2]), std::abs(q[3])};
    std::sort(mags.begin(), mags.end());
    if (mags[2] < 0.15) {
      ++near_axis;
      continue;
    }
    // Triple degeneracy would force both spanning vectors of the invariant
    // plane T0 to be eigenvectors of Y; their eigen-residuals stay bounded
    // away from zero for generic q.
    Vec4 u0 = q.c;
    Vec4 v0{0.0, x[1] * q[1], x[2] * q[2], x[3] * q[3]};
    v0 = vec_scale(v0, 1.0 / vec_norm(v0));

    double best = 1e300;
    for (int i = 1; i <= 19; ++i) {
      double rho = 0.05 * i;
      CanonicalStrategy cnu;
      cnu.probs = {rho, 1.0 - rho};
      cnu.supports = {Quaternion::basis(0), q};
      Mat4 y = best_response_matrix_A(cnu, payoffs).M;
      auto resid = [&](const Vec4& v) {
        Vec4 yv = mat_vec(y, v);
        return vec_norm(vec_sub(yv, vec_scale(v, vec_dot(v, yv))));
      };
      best = std::min(best, std::max(resid(u0), resid(v0)));
    }
    worst_min = std::min(worst_min, best);

    ScanRow row;
    row.case_label = res.label;
    row.params = "q=" + fmt_quaternion(q);
    row.gap = best;
    row.verdict = best < 1e-3;
    res.scan.push_back(row);
  }

  std::ostringstream sum;
  sum.precision(4);
  sum << "no triple-degenerate top for generic q: min simultaneous "
         "eigen-residual "
      << worst_min << " over the grid (threshold 1e-3); " << near_axis
      << " near-axis points excluded";
  res.summary = sum.str();
  return res;
}

CaseResult case_m4(const ClassicalPayoffs& payoffs) {
  CaseResult res;
  res.label = "M4";
  const Vec4& x = payoffs.X;
  res.notes.push_back(
      "scalar Y requires every off-diagonal entry to vanish; each is a "
      "payoff difference times a product of two q components, so at most "
      "one imaginary component of q survives");

  // Axis q = e_k: Y = diag(rho X + (1-rho) X o xork). Scalarity forces
  // rho = 1/2 and the xor-pair sums of X to collide, which genericity
  // forbids.
  bool possible = false;
  for (int k = 1; k <= 3; ++k) {
    int a = -1, b = -1;
    for (int g = 1; g < 4; ++g)
      if (g != k) (a < 0 ? a : b) = g;
    double margin = std::abs((x[0] + x[k]) - (x[a] + x[b]));
    ScanRow row;
    row.case_label = res.label;
    row.params = "axis=" + std::to_string(k) + ";rho=0.5";
    row.gap = margin;  // distance from the required sum collision
    row.verdict = margin < 1e-12;
    possible = possible || row.verdict;
    res.scan.push_back(row);
  }
  res.summary = possible
                    ? "scalar Y attainable (payoffs are not generic)"
                    : "scalar Y impossible: xor-pair payoff sums are distinct";
  return res;
}

}  // namespace

CaseResult classify_M34(const ClassicalPayoffs& payoffs) {
  CaseResult m3 = case_m3(payoffs, 12345);
  CaseResult m4 = case_m4(payoffs);
  m3.summary += " | " + m4.summary;
  for (auto& n : m4.notes) m3.notes.push_back(n);
  for (auto& r : m4.scan) m3.scan.push_back(r);
  for (auto& f : m4.findings) m3.findings.push_back(f);
  return m3;
}

// ---------------------------------------------------------------- N >= 3

namespace {

// Does a probability vector on the three support axes exist making the
// response diagonal equal-maximal on the three eq_set axes? Returns the
// margin of the best scanned point and, when the exact linear solve lands
// inside the simplex with the top condition satisfied, the solution.
struct SupportFeasibility {
  bool exact_feasible = false;
  std::vector<double> exact_weights;
  double scan_margin = 1e300;
};

SupportFeasibility axis_support_feasible(const std::vector<int>& eq_set,
                                         const std::vector<int>& support,
                                         const Vec4& x, const N3Config& cfg) {
  SupportFeasibility out;

  // d_alpha(w) = sum_{b in support} w_b x[b ^ alpha]
  auto diag_at = [&](const std::vector<double>& w) {
    Vec4 d{0, 0, 0, 0};
    for (int a = 0; a < 4; ++a)
      for (size_t i = 0; i < 3; ++i) d[a] += w[i] * x[support[i] ^ a];
    return d;
  };
  auto margin_of = [&](const Vec4& d) {
    double dmin = 1e300, dmax = -1e300;
    for (int a : eq_set) {
      dmin = std::min(dmin, d[a]);
      dmax = std::max(dmax, d[a]);
    }
    double excess = 0.0;
    for (int a = 0; a < 4; ++a)
      if (std::find(eq_set.begin(), eq_set.end(), a) == eq_set.end())
        excess = std::max(excess, d[a] - dmin);
    return (dmax - dmin) + std::max(0.0, excess);
  };

  // Exact: two equality constraints plus normalization -> 3x3 solve.
  {
    double m[3][3], rhs[3] = {0.0, 0.0, 1.0};
    for (int c = 0; c < 3; ++c) {
      m[0][c] = x[support[c] ^ eq_set[0]] - x[support[c] ^ eq_set[1]];
      m[1][c] = x[support[c] ^ eq_set[0]] - x[support[c] ^ eq_set[2]];
      m[2][c] = 1.0;
    }
    double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                 m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                 m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (std::abs(det) > 1e-12) {
      double w[3];
      for (int c = 0; c < 3; ++c) {
        double mm[3][3];
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) mm[i][j] = j == c ? rhs[i] : m[i][j];
        double dc = mm[0][0] * (mm[1][1] * mm[2][2] - mm[1][2] * mm[2][1]) -
                    mm[0][1] * (mm[1][0] * mm[2][2] - mm[1][2] * mm[2][0]) +
                    mm[0][2] * (mm[1][0] * mm[2][1] - mm[1][1] * mm[2][0]);
        w[c] = dc / det;
      }
      if (w[0] > -1e-12 && w[1] > -1e-12 && w[2] > -1e-12) {
        Vec4 d = diag_at({w[0], w[1], w[2]});
        if (margin_of(d) < cfg.equal_tol) {
          out.exact_feasible = true;
          out.exact_weights = {w[0], w[1], w[2]};
        }
      }
    }
  }

  // Scan of the probability simplex at the configured resolution.
  const int n = cfg.simplex_steps;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n - i; ++j) {
      std::vector<double> w{i / double(n), j / double(n),
                            (n - i - j) / double(n)};
      out.scan_margin = std::min(out.scan_margin, margin_of(diag_at(w)));
    }
  return out;
}

CaseResult case_n3_i(const ClassicalPayoffs& payoffs, const N3Config& cfg,
                     const OracleConfig& oracle_cfg) {
  CaseResult res;
  res.label = "N3plus-i";
  std::vector<std::vector<int>> subsets = {
      {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};

  int feasible_pairs = 0;
  for (const auto& lambda : subsets)
    for (const auto& sigma : subsets) {
      // Alice's support lambda must top Y built from Bob's weights on
      // sigma; Bob's support sigma must top Z built from Alice's weights
      // on lambda (with the seat-swapped payoff vector).
      SupportFeasibility fa =
          axis_support_feasible(lambda, sigma, payoffs.X, cfg);
      SupportFeasibility fb =
          axis_support_feasible(sigma, lambda, payoffs.xtilde(), cfg);

      auto set_name = [](const std::vector<int>& s) {
        std::string r;
        for (int v : s) r += std::to_string(v);
        return r;
      };
      ScanRow row;
      row.case_label = res.label;
      row.params =
          "lambda=" + set_name(lambda) + ";sigma=" + set_name(sigma);
      row.gap = fa.scan_margin + fb.scan_margin;
      row.residual_a = fa.scan_margin;
      row.residual_b = fb.scan_margin;
      row.verdict = fa.exact_feasible && fb.exact_feasible;
      res.scan.push_back(row);

      if (row.verdict) {
        ++feasible_pairs;
        MixedStrategy mu, nu;
        for (int i = 0; i < 3; ++i) {
          mu.atoms.push_back(
              {fb.exact_weights[i], Quaternion::basis(lambda[i])});
          nu.atoms.push_back(
              {fa.exact_weights[i], Quaternion::basis(sigma[i])});
        }
        Finding f;
        f.description = "axis-supported 3x3 candidate lambda=" +
                        set_name(lambda) + " sigma=" + set_name(sigma);
        f.mu = mu;
        f.nu = nu;
        f.report = verify_nash(mu, nu, payoffs);
        f.oracle = epsilon_nash_oracle(mu, nu, payoffs, oracle_cfg);
        f.has_oracle = true;
        res.findings.push_back(f);
      }
    }

  res.summary = feasible_pairs == 0
                    ? "all 16 axis-subset pairs infeasible"
                    : std::to_string(feasible_pairs) + " feasible pairs";
  return res;
}

CaseResult case_n3_ii(const ClassicalPayoffs& payoffs,
                      const OracleConfig& oracle_cfg) {
  CaseResult res;
  res.label = "N3plus-ii";

  MixedStrategy uniform;
  for (int a = 0; a < 4; ++a)
    uniform.atoms.push_back({0.25, Quaternion::basis(a)});

  NashReport rep = verify_nash(uniform, uniform, payoffs);

  // Frame completeness makes both matrices exactly scalar, so the verifier
  // must return true; the published classification claims otherwise, hence
  // the discrepancy flag on the finding.
  Finding f;
  f.description =
      "uniform quarter weights on an orthonormal frame: both best-response "
      "matrices equal (sum X / 4) * identity";
  f.mu = uniform;
  f.nu = uniform;
  f.report = rep;
  f.oracle = epsilon_nash_oracle(uniform, uniform, payoffs, oracle_cfg);
  f.has_oracle = true;
  f.flagged = true;
  f.flag = kDiscrepancyFlag;
  res.findings.push_back(f);

  ScanRow row;
  row.case_label = res.label;
  row.params = "pair=uniform-frame";
  row.gap = rep.top_gap;  // infinity when the matrix is scalar
  row.residual_a = rep.residual_a;
  row.residual_b = rep.residual_b;
  row.verdict = rep.verdict;
  res.scan.push_back(row);

  std::ostringstream sum;
  sum << "uniform-frame pair: verifier verdict "
      << (rep.verdict ? "true" : "false") << ", payoffs ("
      << rep.payoffs.first << ", " << rep.payoffs.second
      << "); flagged " << kDiscrepancyFlag;
  res.summary = sum.str();
  return res;
}

}  // namespace

CaseResult classify_N3plus(const ClassicalPayoffs& payoffs,
                           const N3Config& cfg,
                           const OracleConfig& oracle_cfg) {
  CaseResult i = case_n3_i(payoffs, cfg, oracle_cfg);
  CaseResult ii = case_n3_ii(payoffs, oracle_cfg);
  i.summary += " | " + ii.summary;
  for (auto& f : ii.findings) i.findings.push_back(f);
  for (auto& r : ii.scan) i.scan.push_back(r);
  return i;
}

// ------------------------------------------------------------- pipeline

ClassificationReport classify_all(const ClassicalPayoffs& payoffs,
                                  const ClassifierConfig& cfg) {
  ClassificationReport report;
  report.config = cfg;
  report.genericity = genericity_check(payoffs);
  report.payoff_condition = payoff_condition_check(payoffs);
  if (!report.genericity.generic) {
    report.refused = true;
    return report;
  }

  report.cases.push_back(classify_N1(payoffs, cfg.oracle));
  report.cases.push_back(classify_N2_axis(payoffs, cfg.oracle));
  report.cases.push_back(classify_N2_caseA(payoffs, cfg.case_a, cfg.oracle));
  report.cases.push_back(classify_N2_caseB(
      payoffs, imaginary_sphere_grid(cfg.case_b_grid, cfg.seed), cfg.oracle));
  report.cases.push_back(case_m3(payoffs, cfg.seed));
  report.cases.push_back(case_m4(payoffs));
  report.cases.push_back(case_n3_i(payoffs, cfg.n3, cfg.oracle));
  report.cases.push_back(case_n3_ii(payoffs, cfg.oracle));

  // Catalogue: the two-atom family surfaced by the axis case, swept over
  // its full parameterization, plus the flagged uniform pair.
  const CaseResult& axis_case = report.cases[1];
  if (!axis_case.findings.empty()) {
    CatalogueEntry fam;
    fam.kind = "equilibrium-family";
    for (int i = 0; i < cfg.family_theta_samples; ++i)
      fam.theta_grid.push_back(std::numbers::pi * i /
                               cfg.family_theta_samples);
    fam.rotors.push_back(Quaternion::basis(0));
    std::vector<Quaternion> extra =
        sphere_grid(std::max(1, cfg.family_rotor_samples - 1),
                    cfg.seed ^ 0x5bd1ULL);
    for (const Quaternion& r : extra) fam.rotors.push_back(r);
    fam.signs = {+1, -1};

    bool all_true = true;
    for (double theta : fam.theta_grid)
      for (const Quaternion& r : fam.rotors)
        for (int sign : fam.signs) {
          auto [mu, nu] = equilibrium_family(theta, r, sign);
          NashReport rep = verify_nash(mu, nu, payoffs);
          all_true = all_true && rep.verdict;
          if (theta == 0.0 && sign == +1 && r.c == Quaternion::basis(0).c)
            fam.representative = rep;
        }
    auto [mu0, nu0] = equilibrium_family(0.0, Quaternion::basis(0), +1);
    fam.oracle = epsilon_nash_oracle(mu0, nu0, payoffs, cfg.oracle);
    fam.flagged = !all_true;  // would indicate an internal inconsistency
    report.catalogue.push_back(fam);
  }

  for (const CaseResult& c : report.cases) {
    if (c.label != "N3plus-ii") continue;
    for (const Finding& f : c.findings) {
      CatalogueEntry u;
      u.kind = "uniform-frame-pair";
      u.representative = f.report;
      u.oracle = f.oracle;
      u.flagged = f.flagged;
      u.flag = f.flag;
      report.catalogue.push_back(u);
    }
  }
  return report;
}

}  // namespace elwq
