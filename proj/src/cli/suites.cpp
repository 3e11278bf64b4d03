#include "torsionlab/cli/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "torsionlab/cli/corpus.hpp"
#include "torsionlab/cli/symbol_expr.hpp"
#include "torsionlab/errors.hpp"
#include "torsionlab/funcalc/discrepancy.hpp"
#include "torsionlab/funcalc/index.hpp"
#include "torsionlab/funcalc/majorant.hpp"
#include "torsionlab/funcalc/perturbation.hpp"
#include "torsionlab/funcalc/trace_identity.hpp"
#include "torsionlab/sections/toeplitz.hpp"
#include "torsionlab/symbols/argument.hpp"
#include "torsionlab/symbols/blaschke.hpp"
#include "torsionlab/torsion/det.hpp"
#include "torsionlab/torsion/exponential.hpp"
#include "torsionlab/torsion/factorized.hpp"
#include "torsionlab/torsion/integral.hpp"
#include "torsionlab/torsion/special.hpp"
#include "torsionlab/torsion/tame.hpp"

namespace torsionlab::cli {

using nlohmann::json;
using sections::Factor;
using sections::FunctionSpec;
using symbols::FourierSymbol;
using symbols::Polynomial;
using symbols::RationalSymbol;
using symbols::SmoothSymbol;

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"golden", "steinberg", "bounds", "traces", "index"};
  return names;
}

namespace {

FourierSymbol Z(int n, cplx c = 1.0) { return FourierSymbol::monomial(n, c); }
FourierSymbol C(cplx c) { return FourierSymbol::constant(c); }
RationalSymbol zr(int m = 1) { return RationalSymbol::z_power(m); }
RationalSymbol lin(cplx a) { return RationalSymbol::linear(a); }

std::string text(cplx c) {
  std::ostringstream os;
  os.precision(12);
  os << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i";
  return os.str();
}

double tol_for(double err) { return std::max(1e-6, 3 * err); }

class Recorder {
 public:
  Recorder(std::string suite, std::vector<SuiteCase>& out) : suite_(std::move(suite)), out_(out) {}

  // Runs body; exceptions become failures carrying the message.
  void run(const std::string& property, int instance, const json& replay,
           const std::function<std::pair<bool, std::string>()>& body) {
    SuiteCase c{suite_, property, instance, false, "", replay};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      std::tie(c.pass, c.detail) = body();
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = std::string("exception: ") + e.what();
    }
    c.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out_.push_back(std::move(c));
  }

  // |got - want| <= tol.
  void close(const std::string& property, int instance, const json& replay, const std::function<cplx()>& got,
             cplx want, double tol) {
    run(property, instance, replay, [&] {
      const cplx v = got();
      const double d = std::abs(v - want);
      return std::make_pair(d <= tol, "got " + text(v) + " want " + text(want) + " diff " + std::to_string(d));
    });
  }

 private:
  std::string suite_;
  std::vector<SuiteCase>& out_;
};

json pair_replay(const std::string& f, const std::string& g) { return {{"f", f}, {"g", g}}; }

cplx det_value(const FourierSymbol& f, const FourierSymbol& g) { return torsion::torsion_det(f, g).value; }

// ---------------------------------------------------------------- golden

void golden(Recorder& rec) {
  struct G {
    const char* f;
    const char* g;
    cplx want;
  };
  const std::vector<G> cases{{"z-0.5", "z-0.3", -1.0},      {"z-0.5", "z-2", 1.0 / (0.5 - 2.0)},
                             {"z-3", "z-0.5", 0.5 - 3.0},    {"2+z", "z", 2.0},
                             {"2+z", "zbar", 0.5},           {"z-0.5", "zbar", -1.0},
                             {"z", "z", -1.0}};
  int k = 0;
  for (const auto& c : cases) {
    const auto f = parse_symbol(c.f), g = parse_symbol(c.g);
    const json rp = pair_replay(c.f, c.g);
    rec.close("tame closed form", k, rp, [&] { return torsion::torsion_tame(*f.rational, *g.rational).value; }, c.want,
              1e-14);
    rec.close("det closed form", k, rp, [&] { return det_value(f.fourier(), g.fourier()); }, c.want, 1e-6);
    rec.close("integral closed form", k, rp, [&] { return torsion::torsion_integral(f.fourier(), g.fourier()).value; },
              c.want, 1e-9);
    rec.close("factorized closed form", k, rp, [&] { return torsion::torsion_factorized(*f.structured, *g.structured).value; },
              c.want, 1e-12);
    ++k;
  }
  rec.run("order of 1/z at 0", 0, {}, [] {
    const int o = zr(-1).ord_at(0.0);
    return std::make_pair(o == -1, "ord " + std::to_string(o));
  });
  rec.run("index of T_z", 0, {}, [] {
    const int i = symbols::numerical_index(Z(1));
    return std::make_pair(i == -1, "index " + std::to_string(i));
  });
  rec.close("tame Steinberg c(z, 1-z)", 0, pair_replay("z", "1-z"),
            [] {
              // 1-z vanishes at z = 1, so the symbol is taken pointwise.
              const RationalSymbol f = zr(), g = RationalSymbol::constant(1.0) - zr();
              cplx prod = 1.0;
              for (cplx lambda : {cplx(0.0), cplx(0.3), cplx(0.0, -0.5), cplx(0.7), cplx(-0.2, 0.4)})
                prod *= torsion::tame_symbol(f, g, lambda).value;
              return prod;
            },
            1.0, 1e-14);
  rec.run("Blaschke conjugation", 0, {{"a", 0.5}}, [] {
    const RationalSymbol cb = symbols::blaschke_factor(0.5).conjugate();
    const RationalSymbol b2(0.5, 0, {2.0}, {0.5});
    double worst = 0.0;
    for (int j = 0; j < 64; ++j) {
      const double th = kTwoPi * j / 64;
      worst = std::max(worst, std::abs(cb(th) - b2(th)));
    }
    return std::make_pair(worst < 1e-12, "max deviation " + std::to_string(worst));
  });
  rec.run("integral basepoint independence", 0, pair_replay("(z-0.5)*exp(z)", "zbar*exp(0.3*zbar+0.2*z)"), [] {
    const auto f = parse_symbol("(z-0.5)*exp(z)").fourier();
    const auto g = parse_symbol("zbar*exp(0.3*zbar+0.2*z)").fourier();
    const auto a = torsion::torsion_integral(f, g, {0.0});
    const auto b = torsion::torsion_integral(f, g, {1.1});
    const double d = std::abs(a.value - b.value);
    return std::make_pair(d <= std::max(a.err_estimate + b.err_estimate, 1e-12),
                          "diff " + std::to_string(d) + " err " + std::to_string(a.err_estimate + b.err_estimate));
  });
  rec.close("Lefschetz analytic shift at 0", 0, pair_replay("2+z", "z"),
            [] { return torsion::lefschetz_torsion(C(2) + Z(1), {torsion::KernelSpec::Kind::analytic_shift, 0.0}).value; },
            2.0, 1e-14);
  rec.close("Lefschetz analytic shift at 0.5", 0, pair_replay("2+z", "z-0.5"),
            [] { return torsion::lefschetz_torsion(C(2) + Z(1), {torsion::KernelSpec::Kind::analytic_shift, 0.5}).value; },
            2.5, 1e-14);
  rec.close("Lefschetz coanalytic shift", 0, pair_replay("2+z", "zbar"),
            [] { return torsion::lefschetz_torsion(C(2) + Z(1), {torsion::KernelSpec::Kind::coanalytic_shift, 0.0}).value; },
            0.5, 1e-14);
  rec.run("functional factorization w^2 against 2+z", 0, {{"f", "w^2"}, {"a", "z"}, {"b", "2+z"}}, [] {
    const auto s = torsion::functional_factorization(Polynomial::monomial(2), Z(1), C(2) + Z(1));
    const double d1 = std::abs(s.lhs.value - 0.25), d2 = std::abs(s.rhs.value - 0.25);
    return std::make_pair(d1 <= 1e-6 && d2 <= 1e-6, "lhs " + text(s.lhs.value) + " rhs " + text(s.rhs.value));
  });
  rec.run("index of w^2 over z", 0, {{"f", "w^2"}, {"base", "z"}}, [] {
    const auto r = funcalc::index_of_composition(Polynomial::monomial(2), Z(1));
    return std::make_pair(r.computed == -2 && r.formula == -2,
                          std::to_string(r.computed) + " vs " + std::to_string(r.formula));
  });
  const cplx inv_e = std::exp(-1.0);
  const json ex = pair_replay("exp(z)", "exp(zbar)");
  rec.close("exp pair det", 0, ex, [] { return det_value(symbols::exp(Z(1)), symbols::exp(Z(-1))); }, inv_e, 1e-8);
  rec.close("exp pair exp path", 0, ex, [] { return torsion::exp_torsion(Z(1), Z(-1)).value; }, inv_e, 1e-12);
  rec.close("exp pair integral", 0, ex,
            [] { return torsion::torsion_integral(symbols::exp(Z(1)), symbols::exp(Z(-1))).value; }, inv_e, 1e-9);
  rec.close("exp pair factorized", 0, ex,
            [] {
              return torsion::torsion_factorized(SmoothSymbol::from_exponent(Z(1)), SmoothSymbol::from_exponent(Z(-1)))
                  .value;
            },
            inv_e, 1e-12);
  rec.close("trace of [T_z, T_zbar]", 0, pair_replay("z", "zbar"), [] { return torsion::berger_shaw(Z(1), Z(-1)).trace; },
            -1.0, 1e-14);
}

// ---------------------------------------------------------------- steinberg

// Property checks compare torsions to within 1e-6, so their det sweeps stop
// once the relative step falls below 1e-10 instead of running to the last
// dimension.
torsion::DetOptions property_det_options() {
  torsion::DetOptions o;
  o.schedule.early_stop = 1e-10;
  return o;
}

template <class A, class B>
torsion::TorsionResult property_det(const A& a, const B& b) {
  return torsion::torsion_det(a, b, property_det_options());
}

cplx property_det_value(const FourierSymbol& f, const FourierSymbol& g) { return property_det(f, g).value; }

void steinberg(Recorder& rec, Corpus& cp, int n) {
  for (int k = 0; k < n; ++k) {
    const SmoothSymbol f = cp.smooth(), g1 = cp.smooth(), g2 = cp.smooth();
    const json rp = {{"f", expression_text(f)}, {"g1", expression_text(g1)}, {"g2", expression_text(g2)}};
    const FourierSymbol F = f.to_fourier(), G1 = g1.to_fourier(), G2 = g2.to_fourier();
    // tau(f, g1) enters four properties; it is computed once, inside the first
    // property that needs it so a failure is recorded against an instance.
    std::optional<torsion::TorsionResult> fg1;
    const auto tau_f_g1 = [&]() -> const torsion::TorsionResult& {
      if (!fg1) fg1 = property_det(F, G1);
      return *fg1;
    };
    rec.run("multiplicativity", k, rp, [&] {
      const auto a = property_det(F, G1 * G2);
      const auto& b = tau_f_g1();
      const auto c = property_det(F, G2);
      const double d = std::abs(a.value - b.value * c.value);
      const double err = a.err_estimate + std::abs(c.value) * b.err_estimate + std::abs(b.value) * c.err_estimate;
      return std::make_pair(d <= tol_for(err), "diff " + std::to_string(d));
    });
    rec.run("antisymmetry", k, rp, [&] {
      const auto& a = tau_f_g1();
      const auto b = property_det(G1, F);
      const double d = std::abs(a.value * b.value - 1.0);
      return std::make_pair(d <= tol_for(std::abs(b.value) * a.err_estimate + std::abs(a.value) * b.err_estimate),
                            "diff " + std::to_string(d));
    });
    rec.run("inverse", k, rp, [&] {
      const auto& a = tau_f_g1();
      const auto b = property_det(F, g1.inverse().to_fourier());
      const double d = std::abs(a.value * b.value - 1.0);
      return std::make_pair(d <= tol_for(std::abs(b.value) * a.err_estimate + std::abs(a.value) * b.err_estimate),
                            "diff " + std::to_string(d));
    });
    rec.run("trivial partner", k, rp, [&] {
      const auto a = property_det(F, C(1));
      return std::make_pair(std::abs(a.value - 1.0) <= tol_for(a.err_estimate), "value " + text(a.value));
    });
    rec.run("conjugation", k, rp, [&] {
      const auto& a = tau_f_g1();
      const auto b = property_det(F.conjugate(), G1.conjugate());
      const double d = std::abs(std::conj(a.value) * b.value - 1.0);
      return std::make_pair(d <= tol_for(std::abs(b.value) * a.err_estimate + std::abs(a.value) * b.err_estimate),
                            "diff " + std::to_string(d));
    });
    rec.run("idempotent partner", k, rp, [&] {
      Factor b = Factor::toeplitz(C(1), "I-e0e0*");
      b.operand.corner = -Matrix::Identity(1, 1);
      const auto a = property_det(Factor::toeplitz(F, "T_f"), b);
      return std::make_pair(std::abs(a.value - 1.0) <= tol_for(a.err_estimate), "value " + text(a.value));
    });
  }
  for (int k = 0; k < n; ++k) {
    const RationalSymbol r = cp.rational();
    const json rp = {{"f", expression_text(r)}};
    rec.run("self torsion sign", k, rp, [&] {
      const cplx v = torsion::torsion_tame(r, r).value;
      const cplx want = symbols::numerical_index(r) % 2 ? -1.0 : 1.0;
      return std::make_pair(std::abs(v - want) <= 1e-14, "value " + text(v));
    });
    rec.run("tame Steinberg relation", k, rp, [&] {
      const RationalSymbol one_minus = RationalSymbol::constant(1.0) - r;
      if (!one_minus.circle_regular()) return std::make_pair(true, std::string("skipped: 1-f vanishes on the circle"));
      const cplx v = torsion::torsion_tame(r, one_minus).value;
      return std::make_pair(std::abs(v - 1.0) <= 1e-9, "value " + text(v));
    });
  }
  for (int k = 0; k < n; ++k) {
    const FourierSymbol a = cp.real_nonvanishing(cp.integer(1, 3)), b = cp.real_nonvanishing(cp.integer(1, 3));
    const json rp = {{"a", expression_text(a)}, {"b", expression_text(b)}};
    rec.run("unimodularity", k, rp, [&] {
      const auto t = property_det(a, b);
      return std::make_pair(std::abs(std::abs(t.value) - 1.0) <= tol_for(t.err_estimate), "value " + text(t.value));
    });
  }
  for (int k = 0; k < n; ++k) {
    const cplx lambda = cp.unit_scale();
    rec.close("scalar rule", k, {{"lambda", {{"re", lambda.real()}, {"im", lambda.imag()}}}},
              [&] { return property_det_value(Z(1), (C(2) + Z(1)) * lambda); }, 1.0 / (2.0 * lambda), 1e-6);
  }
  for (int k = 0; k < n; ++k) {
    const double c = cp.uniform(1.3, 3.0);
    const FourierSymbol a = C(c) + Z(1, 0.5) + Z(-1, 0.5);  // c + cos
    const FourierSymbol b = k % 2 ? Z(-1) : Z(1);
    const json rp = {{"a", expression_text(a)}, {"b", expression_text(b)}};
    const auto at = [&](double t) {
      const Factor A = Factor::toeplitz(a, "T_a").with_function(FunctionSpec::power(t),
                                                                 sections::MatrixFunctionMode::hermitian_eig);
      return property_det(A, Factor::toeplitz(b, "T_b")).value;
    };
    const auto ra = symbols::laurent_polynomial_as_rational(a);
    const auto rb = symbols::laurent_polynomial_as_rational(b);
    const cplx base = torsion::torsion_tame(*ra, *rb).value;
    for (double t : {0.5, 1.0, 2.0, -1.0})
      rec.close("power law t=" + std::to_string(t), k, rp, [&] { return at(t); }, std::pow(base, t), 1e-6);
    rec.run("power law derivative", k, rp, [&] {
      const double h = 1e-3;
      const cplx d = (std::log(at(0.7 + h)) - std::log(at(0.7 - h))) / (2 * h);
      const double diff = std::abs(d - std::log(base));
      return std::make_pair(diff <= 1e-4, "diff " + std::to_string(diff));
    });
  }
  for (int k = 0; k < n; ++k) {
    const FourierSymbol f = cp.trig_polynomial(cp.integer(1, 4), 1.0), g = cp.trig_polynomial(cp.integer(1, 4), 1.0);
    const json rp = {{"f", expression_text(f)}, {"g", expression_text(g)}};
    rec.run("variational exponential rule", k, rp, [&] {
      const double h = 1e-3;
      const cplx lp = std::log(torsion::exp_torsion(f * (1 + h), g).value);
      const cplx lm = std::log(torsion::exp_torsion(f * (1 - h), g).value);
      const cplx l1 = torsion::berger_shaw_coefficients(f, g);
      const double diff = std::abs((lp - lm) / (2 * h) - l1);
      return std::make_pair(diff <= 1e-4, "diff " + std::to_string(diff));
    });
  }
  for (int k = 0; k < n; ++k) {
    const SmoothSymbol f = cp.smooth(), g = cp.smooth();
    const json rp = {{"f", expression_text(f)}, {"g", expression_text(g)}};
    rec.run("integral basepoint independence", k, rp, [&] {
      const double th = cp.uniform(0.1, 6.0);
      const auto F = f.to_fourier(), G = g.to_fourier();
      const auto a = torsion::torsion_integral(F, G, {0.0}), b = torsion::torsion_integral(F, G, {th});
      const double d = std::abs(a.value - b.value);
      const double tol = std::max(a.err_estimate + b.err_estimate, 1e-12 * std::abs(a.value));
      return std::make_pair(d <= tol, "diff " + std::to_string(d) + " tol " + std::to_string(tol));
    });
  }
}

// ---------------------------------------------------------------- bounds

std::vector<std::pair<std::string, FunctionSpec>> bound_functions() {
  return {{"w^2", FunctionSpec::polynomial({0, 0, 1})},
          {"w^3", FunctionSpec::polynomial({0, 0, 0, 1})},
          {"exp", FunctionSpec::exp()}};
}

void bounds(Recorder& rec, Corpus& cp, int n) {
  std::vector<FourierSymbol> phis{Z(1) + Z(-1), Z(1) + Z(-1) + Z(2, 0.5) + Z(-2, 0.5)};
  for (int k = 0; k < n; ++k) phis.push_back(cp.real_trig_polynomial(cp.integer(1, 3), 1.0));
  for (std::size_t k = 0; k < phis.size(); ++k) {
    const json rp = {{"phi", expression_text(phis[k])}};
    for (const auto& [name, f] : bound_functions())
      for (double p : {1.0, 2.0}) {
        json r = rp;
        r["f"] = name;
        r["p"] = p;
        rec.run("discrepancy " + name + " p=" + std::to_string(static_cast<int>(p)), static_cast<int>(k), r, [&] {
          const auto d = funcalc::calculus_discrepancy(phis[k], f, p);
          return std::make_pair(d.two_p.pass && d.p.pass,
                                "2p " + std::to_string(d.two_p.measured) + "<=" + std::to_string(d.two_p.bound) + ", p " +
                                    std::to_string(d.p.measured) + "<=" + std::to_string(d.p.bound));
        });
      }
    rec.run("linear discrepancy vanishes", static_cast<int>(k), rp, [&] {
      const auto d = funcalc::calculus_discrepancy(phis[k], FunctionSpec::polynomial({0.3, -1.2}), 1.0);
      return std::make_pair(d.p.measured == 0.0 && d.two_p.measured == 0.0 && d.p.bound == 0.0,
                            "measured " + std::to_string(d.p.measured));
    });
    for (double t : {0.0, 1.0, 3.0}) {
      json r = rp;
      r["t"] = t;
      rec.run("unitary estimate t=" + std::to_string(t), static_cast<int>(k), r, [&] {
        const auto e = funcalc::exp_unitary_estimate(phis[k], t, 1.0);
        return std::make_pair(e.pass, std::to_string(e.measured) + "<=" + std::to_string(e.bound));
      });
    }
    rec.run("perturbation plateau", static_cast<int>(k), rp, [&] {
      Matrix K = Matrix::Zero(2, 2);
      K(0, 0) = 1.0;
      K(0, 1) = K(1, 0) = 0.25;
      const auto r = funcalc::perturbation_schatten(phis[k], K, FunctionSpec::exp(), 1.0);
      return std::make_pair(r.pass, "history tail " + std::to_string(r.measured) + " change " +
                                        std::to_string(r.constants.at("relative_change")));
    });
  }
  rec.close("majorant exp at 1", 0, {}, [] { return funcalc::majorant_second_derivative(FunctionSpec::exp(), 1.0).value; },
            std::exp(1.0), 1e-13);
  rec.run("discrepancy w^2 on z+zbar", 0, {{"phi", "z+zbar"}, {"f", "w^2"}, {"p", 1}}, [] {
    const auto d = funcalc::calculus_discrepancy(Z(1) + Z(-1), FunctionSpec::polynomial({0, 0, 1}), 1.0);
    return std::make_pair(std::abs(d.p.measured - 1.0) <= 1e-10 && std::abs(d.p.bound - 2.0) <= 1e-10,
                          "measured " + std::to_string(d.p.measured) + " bound " + std::to_string(d.p.bound));
  });
}

// ---------------------------------------------------------------- traces

void traces(Recorder& rec, Corpus& cp, int n) {
  for (int k = 0; k < n; ++k) {
    const FourierSymbol f = cp.trig_polynomial(cp.integer(1, 6), 1.0), g = cp.trig_polynomial(cp.integer(1, 6), 1.0);
    const json rp = {{"f", expression_text(f)}, {"g", expression_text(g)}};
    rec.run("Berger-Shaw three ways", k, rp, [&] {
      const auto b = torsion::berger_shaw(f, g);
      const double d = std::max({std::abs(b.trace - b.integral), std::abs(b.trace - b.coefficient_sum),
                                 std::abs(b.integral - b.coefficient_sum)});
      return std::make_pair(d <= 1e-10, "max diff " + std::to_string(d));
    });
    rec.run("Hilbert-Schmidt commutator norm", k, rp, [&] {
      const double hs = sections::hankel_blocks(f, f.bandwidth()).hilbert_schmidt();
      const double d = std::abs(hs - symbols::sobolev_half_seminorm(f));
      return std::make_pair(d <= 1e-12, "diff " + std::to_string(d));
    });
  }
  for (int k = 0; k < n; ++k) {
    const FourierSymbol phi = cp.trig_polynomial(cp.integer(1, 4), 1.0), psi = cp.trig_polynomial(cp.integer(1, 4), 1.0);
    const json rp = {{"phi", expression_text(phi)}, {"psi", expression_text(psi)}};
    for (const auto& [name, f] : bound_functions()) {
      const bool poly = f.is_polynomial();
      json r = rp;
      r["f"] = name;
      rec.run("trace identity " + name, k, r, [&] {
        const auto t = poly ? funcalc::trace_commutator_identity(phi, psi, f, {16, 32})
                            : funcalc::trace_commutator_identity(phi, psi, f);
        const double tol = poly ? 1e-10 : 1e-6;
        return std::make_pair(t.gap <= tol, "gap " + std::to_string(t.gap));
      });
    }
  }
  rec.run("corollary consistency w^2, T_z, T_zbar", 0, {}, [] {
    const auto t = funcalc::trace_commutator_identity(Z(1), Z(-1), FunctionSpec::polynomial({0, 0, 1}), {8, 16});
    return std::make_pair(t.gap <= 1e-6, "gap " + std::to_string(t.gap));
  });
}

// ---------------------------------------------------------------- index

void index_suite(Recorder& rec, Corpus& cp, int n) {
  for (int k = 0; k < n; ++k) {
    const Polynomial f = cp.polynomial();
    json coeffs = json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back({{"re", c.real()}, {"im", c.imag()}});
    rec.run("index formula", k, {{"f", coeffs}, {"base", "z"}}, [&] {
      const auto r = funcalc::index_of_composition(f, Z(1));
      return std::make_pair(r.computed == r.formula,
                            std::to_string(r.computed) + " vs " + std::to_string(r.formula));
    });
  }
  for (int k = 0; k < std::max(1, n / 2); ++k) {
    std::vector<cplx> roots;
    const int d = cp.integer(1, 3);
    for (int j = 0; j < d; ++j) roots.push_back(cp.integer(0, 1) ? cp.point_inside(0.1, 0.8) : cp.point_outside(1.3, 3.0));
    const Polynomial f = Polynomial::from_roots(roots);
    const FourierSymbol b = cp.integer(0, 1) ? Z(-1) : C(2) + Z(1) * cp.uniform(-1, 1);
    json rr = json::array();
    for (const auto& r : roots) rr.push_back({{"re", r.real()}, {"im", r.imag()}});
    rec.run("functional factorization", k, {{"roots", rr}, {"a", "z"}, {"b", expression_text(b)}}, [&] {
      const auto s = torsion::functional_factorization(f, Z(1), b);
      const double diff = std::abs(s.lhs.value - s.rhs.value);
      return std::make_pair(diff <= tol_for(s.lhs.err_estimate + s.rhs.err_estimate),
                            "lhs " + text(s.lhs.value) + " rhs " + text(s.rhs.value));
    });
  }
}

}  // namespace

std::vector<SuiteCase> run_suite(const std::string& name, const SuiteOptions& opts) {
  std::vector<SuiteCase> out;
  Recorder rec(name, out);
  Corpus cp(opts.seed);
  const int n = opts.corpus_size;
  if (name == "golden") golden(rec);
  else if (name == "steinberg") steinberg(rec, cp, n);
  else if (name == "bounds") bounds(rec, cp, n);
  else if (name == "traces") traces(rec, cp, n);
  else if (name == "index") index_suite(rec, cp, n);
  else throw std::invalid_argument("unknown suite '" + name + "'");
  for (auto& c : out) {
    c.replay["suite"] = name;
    c.replay["seed"] = opts.seed;
    c.replay["corpus_size"] = opts.corpus_size;
  }
  return out;
}

}  // namespace torsionlab::cli
