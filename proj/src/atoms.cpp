#include "mwvortex/atoms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mwvortex/errors.hpp"

namespace mwvortex {

namespace {
constexpr cd I{0.0, 1.0};

struct Term {
  cd coeff;
  int i, j;
};

// Adds d rho_ab/dt = sum coeff * rho_ij and, for a != b, the conjugate row.
void add_row(Generator& g, int a, int b, std::initializer_list<Term> terms) {
  for (const Term& t : terms) {
    g(vec_index(a, b), vec_index(t.i, t.j)) += t.coeff;
    if (a != b) g(vec_index(b, a), vec_index(t.j, t.i)) += std::conj(t.coeff);
  }
}
}  // namespace

LevelScheme LevelScheme::v_default(Convention c) {
  LevelScheme s;
  s.kind = Kind::V;
  s.g12 = 1.0;
  s.g13 = 1.0;
  s.g32 = 2.0;
  s.convention = c;
  return s;
}

LevelScheme LevelScheme::lambda_default(Convention c) {
  LevelScheme s;
  s.kind = Kind::Lambda;
  s.g12 = 2.0;
  s.g13 = 1.0;
  s.g32 = 1.0;
  s.convention = c;
  return s;
}

void LevelScheme::check() const {
  if (g12 < 0 || g13 < 0 || g32 < 0) throw ConfigError("decay rates must be >= 0");
  for (double d : {g12, g13, g32, d1, d2, d3})
    if (!std::isfinite(d)) throw ConfigError("scheme parameters must be finite");
}

Vec9 to_vec(const DensityMatrix& rho) {
  Vec9 v;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) v(vec_index(i, j)) = rho(i - 1, j - 1);
  return v;
}

DensityMatrix from_vec(const Vec9& v) {
  DensityMatrix rho;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) rho(i - 1, j - 1) = v(vec_index(i, j));
  return rho;
}

Generator build_generator(const LevelScheme& sc, const DriveSet& d) {
  sc.check();
  const double s = sc.convention == Convention::as_printed ? 1.0 : -1.0;
  const cd o1 = d.o1, o2 = d.o2, o3 = d.o3;
  Generator g = Generator::Zero();

  add_row(g, 2, 2, {{I * std::conj(o2), 1, 2}, {-I * o2, 2, 1}, {I * o3, 3, 2},
                    {-I * std::conj(o3), 2, 3}, {-2.0 * sc.g12, 2, 2}, {2.0 * sc.g32, 3, 3}});
  add_row(g, 3, 3, {{I * std::conj(o1), 1, 3}, {-I * o1, 3, 1}, {-I * o3, 3, 2},
                    {I * std::conj(o3), 2, 3}, {-2.0 * (sc.g13 + sc.g32), 3, 3}});
  add_row(g, 1, 2, {{-I * o2 * s, 2, 2}, {I * o2 * s, 1, 1}, {I * o1, 3, 2},
                    {-I * std::conj(o3), 1, 3}, {I * sc.d2 - sc.g12, 1, 2}});
  add_row(g, 1, 3, {{-I * o1 * s, 3, 3}, {I * o1 * s, 1, 1}, {I * o2, 2, 3},
                    {-I * o3, 1, 2}, {I * sc.d1 - (sc.g13 + sc.g32), 1, 3}});
  add_row(g, 2, 3, {{-I * o1, 2, 1}, {I * std::conj(o2), 1, 3}, {I * o3 * s, 2, 2},
                    {-I * o3 * s, 3, 3}, {I * sc.d3 - (sc.g13 + sc.g12 + sc.g32), 2, 3}});

  // rho11 is closed by trace conservation
  g.row(vec_index(1, 1)) = -(g.row(vec_index(2, 2)) + g.row(vec_index(3, 3)));
  return g;
}

DensityMatrix evolve(const LevelScheme& scheme, const DriveSet& drives, const DensityMatrix& rho0,
                     double t_final, double dt, const EvolveOptions& opt) {
  const double omax = std::max({1.0, std::abs(drives.o1), std::abs(drives.o2), std::abs(drives.o3)});
  if (!(dt > 0.0) || dt > 0.01 / omax * (1.0 + 1e-12))
    throw StepTooLarge("dt must satisfy dt <= 0.01 / max(1, |W|max)");
  if (t_final < 0.0) throw std::invalid_argument("t_final must be >= 0");

  const Generator g = build_generator(scheme, drives);
  const long n = std::max<long>(1, static_cast<long>(std::ceil(t_final / dt - 1e-9)));
  const double h = t_final / n;

  // one RK4 step of a linear system is multiplication by this polynomial in hG
  const Generator hg = h * g;
  const Generator hg2 = hg * hg;
  const Generator step = Generator::Identity() + hg + hg2 / 2.0 + hg2 * hg / 6.0 + hg2 * hg2 / 24.0;

  Vec9 v = to_vec(rho0);
  for (long k = 0; k < n; ++k) {
    v = step * v;
    const cd tr = v(vec_index(1, 1)) + v(vec_index(2, 2)) + v(vec_index(3, 3));
    double herm = 0.0;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        herm = std::max(herm, std::abs(v(vec_index(i, j)) - std::conj(v(vec_index(j, i)))));
    if (std::abs(tr - 1.0) > opt.tolerance || herm > opt.tolerance || !std::isfinite(std::abs(tr)))
      throw StepTooLarge("trace or hermiticity drift exceeded tolerance at step " + std::to_string(k));
    for (int i = 1; i <= 3; ++i) {
      const double p = v(vec_index(i, i)).real();
      if (p < -opt.tolerance || p > 1.0 + opt.tolerance)
        throw UnphysicalState("population rho" + std::to_string(i) + std::to_string(i) +
                              " left [0, 1] at step " + std::to_string(k));
    }
  }
  return from_vec(v);
}

SteadyState steady_state(const LevelScheme& scheme, const DriveSet& drives) {
  if (!(scheme.g12 > 0 || scheme.g13 > 0 || scheme.g32 > 0))
    throw SingularSystem("steady state needs at least one nonzero decay rate");
  Generator a = build_generator(scheme, drives);
  Vec9 b = Vec9::Zero();
  a.row(vec_index(1, 1)).setZero();
  for (int i = 1; i <= 3; ++i) a(vec_index(1, 1), vec_index(i, i)) = 1.0;
  b(vec_index(1, 1)) = 1.0;

  Eigen::PartialPivLU<Generator> lu(a);
  const double rc = lu.rcond();
  if (!(rc > 1e-13)) throw SingularSystem("steady-state system is rank deficient (rcond " + std::to_string(rc) + ")");
  SteadyState out;
  out.rho = from_vec(lu.solve(b));
  out.condition = 1.0 / rc;
  return out;
}

double spectral_abscissa(const Generator& g) {
  Eigen::ComplexEigenSolver<Generator> es(g, false);
  double m = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < 9; ++k) m = std::max(m, es.eigenvalues()(k).real());
  return m;
}

}  // namespace mwvortex
