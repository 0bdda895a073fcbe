#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "majorana/acceptance.hpp"
#include "majorana/adapted_basis.hpp"
#include "majorana/fs_geometry.hpp"
#include "majorana/husimi.hpp"
#include "majorana/io.hpp"
#include "majorana/sc_basis.hpp"
#include "majorana/stellar.hpp"
#include "majorana/superposition.hpp"

namespace {

using namespace majorana;
using io::Json;
using io::Table;

enum class Format { Json, Csv };

struct Globals {
  std::uint64_t seed = 7;
  std::vector<std::string> tol_overrides;
  std::string out_path;
  std::string format = "json";

  Tolerances tol;
  Format fmt = Format::Json;
};

// Exit codes.
constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kNumerical = 2;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

void apply_globals(Globals& g) {
  for (const auto& kv : g.tol_overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) invalid("--tol expects KEY=VALUE, got \"" + kv + "\"");
    const std::string key = kv.substr(0, eq);
    const std::string text = kv.substr(eq + 1);
    double value = 0.0;
    std::size_t used = 0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) invalid("--tol " + key + ": \"" + text + "\" is not a number");
    if (!g.tol.set(key, value)) invalid("--tol: unknown key \"" + key + "\"");
  }
  g.fmt = g.format == "csv" ? Format::Csv : Format::Json;
}

SpinState read_state(const std::string& path) {
  const SpinState s = io::state_from_json(io::read_json_file(path), path);
  if (s.norm() == 0.0) invalid(path + ": every coefficient is zero");
  return s.normalized();
}

std::vector<io::StarRecord> read_records(const std::string& path) {
  return io::records_from_json(io::read_json_file(path), path);
}

Complex parse_complex(const std::string& text, const std::string& flag) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(text, &used);
      if (used == text.size()) return {re, 0.0};
    } else {
      const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
      std::size_t ub = 0;
      const double re = std::stod(a, &used);
      const double im = std::stod(b, &ub);
      if (used == a.size() && ub == b.size()) return {re, im};
    }
  } catch (const std::exception&) {
  }
  invalid(flag + " expects RE,IM, got \"" + text + "\"");
}

Json warnings_json(const std::vector<std::string>& w) { return Json(w); }

void emit(const Globals& g, const std::string& text) {
  if (g.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out_path, std::ios::binary);
  if (!f) invalid(g.out_path + ": cannot open for writing");
  f << text;
  if (!f) throw Error(ErrorCode::InvalidArgument, g.out_path + ": write failed");
}

void emit_json(const Globals& g, const Json& j) { emit(g, j.dump(2) + "\n"); }

void emit_table(const Globals& g, const Table& t) {
  if (g.fmt == Format::Csv) {
    std::ostringstream os;
    io::write_csv(os, t);
    emit(g, os.str());
  } else {
    emit_json(g, io::table_to_json(t));
  }
}

Table coefficient_table(const std::vector<Direction>& dirs, const CVector& alphas) {
  Table t{{"index", "theta", "phi", "re", "im"}, {}};
  for (int i = 0; i < alphas.size(); ++i) {
    t.add({static_cast<long long>(i), dirs[i].theta, dirs[i].phi, alphas(i).real(), alphas(i).imag()});
  }
  return t;
}

// stars -----------------------------------------------------------------------

int run_stars(const Globals& g, const std::string& path) {
  const auto records = io::star_records(constellation(read_state(path), g.tol));
  if (g.fmt == Format::Csv) {
    Table t{{"theta", "phi", "mult"}, {}};
    for (const auto& r : records) t.add({r.direction.theta, r.direction.phi, static_cast<long long>(r.mult)});
    emit_table(g, t);
  } else {
    emit_json(g, io::records_to_json(records));
  }
  return kOk;
}

// state -----------------------------------------------------------------------

int run_state(const Globals& g, const std::string& path) {
  const SpinState s = state_from_constellation(io::to_constellation(read_records(path))).normalized().phase_fixed();
  if (g.fmt == Format::Csv) {
    Table t{{"m", "re", "im"}, {}};
    for (int i = 0; i < s.dim(); ++i) t.add({0.5 * (s.two_spin() - 2 * i), s[i].real(), s[i].imag()});
    emit_table(g, t);
  } else {
    emit_json(g, io::state_to_json(s));
  }
  return kOk;
}

// expand ----------------------------------------------------------------------

int run_expand(const Globals& g, const std::string& state_path, const std::string& basis_path) {
  const SpinState s = read_state(state_path);
  const std::vector<Direction> dirs = io::to_directions(read_records(basis_path));
  if (static_cast<int>(dirs.size()) != s.dim()) {
    invalid(basis_path + ": spin " + s.spin_label() + " needs " + std::to_string(s.dim()) + " basis directions, got " +
            std::to_string(dirs.size()));
  }
  const SCBasis basis(dirs, g.tol);
  const ExpansionCoefficients e = expand_in_sc_basis(s, basis, g.tol);
  if (g.fmt == Format::Csv) {
    emit_table(g, coefficient_table(dirs, e.alphas));
    return kOk;
  }
  Json j;
  j["alphas"] = io::complex_vector_to_json(e.alphas);
  j["product_alphas"] = io::complex_vector_to_json(e.product_alphas);
  j["residual"] = e.residual;
  j["condition_number"] = e.condition_number;
  j["warnings"] = warnings_json(e.warnings);
  emit_json(g, j);
  return kOk;
}

// adapted-basis ---------------------------------------------------------------

int run_adapted(const Globals& g, const std::string& path) {
  const AdaptedBasis a = adapted_basis(read_state(path), g.tol);
  const auto& dirs = a.basis.directions();
  if (g.fmt == Format::Csv) {
    emit_table(g, coefficient_table(dirs, a.coefficients.alphas));
    return kOk;
  }
  Json j;
  j["basis"] = io::records_to_json(io::star_records(dirs));
  j["alphas"] = io::complex_vector_to_json(a.coefficients.alphas);
  j["product_alphas"] = io::complex_vector_to_json(a.coefficients.product_alphas);
  j["residual"] = a.coefficients.residual;
  j["ties"] = io::records_to_json(io::star_records(a.ties));
  std::vector<std::string> w = a.warnings;
  w.insert(w.end(), a.coefficients.warnings.begin(), a.coefficients.warnings.end());
  j["warnings"] = warnings_json(w);
  emit_json(g, j);
  return kOk;
}

// husimi ----------------------------------------------------------------------

int run_husimi(const Globals& g, const std::string& path, int grid) {
  const SpinState s = read_state(path);
  if (grid > 0) {
    Table t{{"theta", "phi", "H", "distance"}, {}};
    for (const auto& p : husimi_grid(s, grid)) t.add({p.theta, p.phi, p.value, p.distance});
    emit_table(g, t);
    return kOk;
  }
  const CriticalSearch r = critical_points(s, g.tol);
  if (g.fmt == Format::Csv) {
    Table t{{"theta", "phi", "kind", "H", "multiplicity", "marginal"}, {}};
    for (const auto& p : r.points) {
      t.add({p.direction.theta, p.direction.phi, std::string(to_string(p.kind)), p.value, static_cast<long long>(p.multiplicity),
             static_cast<long long>(p.marginal)});
    }
    emit_table(g, t);
    return kOk;
  }
  const ClosestSC c = closest_sc(r, g.tol);
  Json crit = Json::array();
  for (const auto& p : r.points) {
    crit.push_back({{"theta", p.direction.theta},
                    {"phi", p.direction.phi},
                    {"kind", to_string(p.kind)},
                    {"H", p.value},
                    {"multiplicity", p.multiplicity},
                    {"marginal", p.marginal}});
  }
  Json j;
  j["criticals"] = crit;
  j["r_c"] = c.distance;
  j["closest"] = {{"theta", c.direction.theta}, {"phi", c.direction.phi}, {"H", c.value}};
  j["ties"] = io::records_to_json(io::star_records(c.ties));
  j["counts"] = {{"LocalMax", r.count(CriticalKind::LocalMax)},
                 {"Saddle", r.count(CriticalKind::Saddle)},
                 {"GlobalMin", r.count(CriticalKind::GlobalMin)}};
  j["euler_characteristic"] = r.euler_characteristic();
  std::vector<std::string> w = r.warnings;
  w.insert(w.end(), c.warnings.begin(), c.warnings.end());
  j["warnings"] = warnings_json(w);
  emit_json(g, j);
  return kOk;
}

// logmap ----------------------------------------------------------------------

struct LogmapArgs {
  std::string spin;
  std::optional<double> alpha;
  std::string state_path;
  int resolution = 50;
  std::string projection = "123";
};

int run_logmap(const Globals& g, const LogmapArgs& a) {
  SpinState base(1, CVector::Zero(2));
  std::optional<TangentFrame> frame;
  if (!a.state_path.empty()) {
    if (a.alpha) invalid("logmap: give either --state or --spin/--alpha, not both");
    base = read_state(a.state_path);
  } else {
    if (!a.alpha) invalid("logmap: --alpha (with --spin 1) or --state is required");
    if (!a.spin.empty() && parse_two_spin(a.spin) != 2) invalid("logmap: --alpha is defined for --spin 1 only");
    base = spin1_pair_state(*a.alpha);
    frame = spin1_pair_frame(*a.alpha);
  }
  if (a.resolution < 2) invalid("logmap: --resolution must be at least 2");
  const LogCloud cloud = frame ? sc_log_cloud(base, a.resolution, *frame, g.tol) : sc_log_cloud(base, a.resolution, g.tol);
  const int dim = 2 * base.two_spin();

  const bool stereo = a.projection == "stereo";
  std::vector<int> axes;
  if (!stereo) {
    for (char ch : a.projection) axes.push_back(ch - '1');
    for (int ax : axes) {
      if (ax >= dim) invalid("logmap: projection axis " + std::to_string(ax + 1) + " exceeds the tangent dimension " + std::to_string(dim));
    }
  }
  const int pdim = stereo ? dim - 1 : 3;

  Table t;
  t.columns = {"theta", "phi"};
  for (int i = 1; i <= dim; ++i) t.columns.push_back("v" + std::to_string(i));
  t.columns.push_back("omega");
  t.columns.push_back("flag");
  for (int i = 1; i <= pdim; ++i) t.columns.push_back("p" + std::to_string(i));

  const double nan = std::numeric_limits<double>::quiet_NaN();
  const auto row = [&](double theta, double phi, const Eigen::VectorXd* v, double omega, const std::string& flag) {
    std::vector<Table::Cell> r = {theta, phi};
    for (int i = 0; i < dim; ++i) r.emplace_back(v ? (*v)(i) : nan);
    r.emplace_back(omega);
    r.emplace_back(flag);
    if (v && stereo && omega > 0.0) {
      const Eigen::VectorXd p = stereographic_projection(*v / omega);
      for (int i = 0; i < pdim; ++i) r.emplace_back(p(i));
    } else if (v && !stereo) {
      for (int ax : axes) r.emplace_back((*v)(ax));
    } else {
      for (int i = 0; i < pdim; ++i) r.emplace_back(nan);
    }
    t.add(std::move(r));
  };
  for (const auto& s : cloud.samples) {
    row(s.theta, s.phi, s.flag == SampleFlag::Ok ? &s.components : nullptr, s.omega, to_string(s.flag));
  }
  // The circle of tangent vectors of length pi/2 that reach each star antipode.
  const auto stars = constellation(base, g.tol).stars();
  for (std::size_t c = 0; c < cloud.circles.size(); ++c) {
    const Direction d = c < stars.size() ? stars[c].direction().antipode() : Direction{nan, nan};
    for (const auto& v : cloud.circles[c]) row(d.theta, d.phi, &v, 0.5 * kPi, "circle");
  }
  emit_table(g, t);
  return kOk;
}

// superpose -------------------------------------------------------------------

int run_superpose(const Globals& g, const std::string& sa, const std::string& sb, const std::string& p1, const std::string& p2,
                  int trajectory) {
  const Complex a = parse_complex(sa, "--a");
  const Complex b = parse_complex(sb, "--b");
  const SpinState s1 = read_state(p1);
  const SpinState s2 = read_state(p2);
  if (s1.two_spin() != s2.two_spin()) invalid("superpose: " + p1 + " and " + p2 + " have different spins");

  if (trajectory > 0) {
    const TrajectoryThrough tt = trajectory_through(a, s1, b, s2, g.tol);
    std::vector<double> ts;
    for (int i = 0; i <= trajectory; ++i) ts.push_back(kPi * i / trajectory);
    const Trajectory tr = two_sc_trajectory(s1.two_spin(), tt.gamma1, tt.gamma2, tt.omega, ts, true);
    Table t{{"t", "k", "re", "im", "x", "y", "z"}, {}};
    const double inf = std::numeric_limits<double>::infinity();
    for (const auto& sample : tr.samples) {
      for (std::size_t k = 0; k < sample.roots.size(); ++k) {
        const StereoPoint& z = sample.roots[k];
        const Vec3 u = stereo_to_sphere(z).unit();
        const double re = z.is_infinite() ? inf : z.value().real();
        const double im = z.is_infinite() ? inf : z.value().imag();
        t.add({sample.t, static_cast<long long>(k), re, im, u.x(), u.y(), u.z()});
      }
    }
    emit_table(g, t);
    return kOk;
  }

  const Superposition sp = superpose(a, s1, b, s2, g.tol);
  if (g.fmt == Format::Csv) {
    Table t{{"theta", "phi", "mult"}, {}};
    for (const auto& r : io::star_records(sp.constellation)) t.add({r.direction.theta, r.direction.phi, static_cast<long long>(r.mult)});
    emit_table(g, t);
    return kOk;
  }
  Json j;
  j["state"] = io::state_to_json(sp.state);
  j["constellation"] = io::records_to_json(io::star_records(sp.constellation));
  j["mason_bound"] = sp.mason_bound;
  j["distinct_stars"] = sp.distinct_stars;
  j["bound_holds"] = sp.bound_holds();
  emit_json(g, j);
  return kOk;
}

// verify ----------------------------------------------------------------------

int run_verify(const Globals& g, double scale) {
  SuiteOptions o;
  o.seed = g.seed;
  o.scale = scale;
  const auto results = run_acceptance(o);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  if (g.fmt == Format::Csv) {
    Table t{{"id", "name", "pass", "detail"}, {}};
    for (const auto& r : results) t.add({static_cast<long long>(r.id), r.name, std::string(r.pass ? "PASS" : "FAIL"), r.detail});
    emit_table(g, t);
  } else {
    emit(g, format_report(results));
  }
  return all ? kOk : kNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stellar representation of spin states: constellations, SC bases, Husimi extrema, log maps, superpositions."};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized sweeps")->capture_default_str();
  app.add_option("--tol", g.tol_overrides, "Override a tolerance, KEY=VALUE (repeatable)");
  app.add_option("--out", g.out_path, "Output file (default: stdout)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  std::string path, path2;
  auto* stars = app.add_subcommand("stars", "Constellation of a state file");
  stars->add_option("state", path, "State file")->required();
  stars->fallthrough();

  auto* state = app.add_subcommand("state", "Normalized state of a constellation file");
  state->add_option("constellation", path, "Constellation file")->required();
  state->fallthrough();

  auto* expand = app.add_subcommand("expand", "Expand a state in the SC basis of N+1 directions");
  expand->add_option("state", path, "State file")->required();
  expand->add_option("basis", path2, "Constellation file with the N+1 basis directions")->required();
  expand->fallthrough();

  auto* adapted = app.add_subcommand("adapted-basis", "SC basis adapted to a state, with coefficients");
  adapted->add_option("state", path, "State file")->required();
  adapted->fallthrough();

  int grid = 0;
  auto* hus = app.add_subcommand("husimi", "Critical points of the Husimi function, or a K x K grid");
  hus->add_option("state", path, "State file")->required();
  hus->add_option("--grid", grid, "Write the Husimi function on a K x K (theta, phi) grid instead")->check(CLI::Range(2, 100000));
  hus->fallthrough();

  LogmapArgs lm;
  double alpha = 0.0;
  auto* logmap = app.add_subcommand("logmap", "Log-map images of the SC sphere");
  logmap->add_option("--spin", lm.spin, "Spin of the pair state (1)");
  auto* alpha_opt = logmap->add_option("--alpha", alpha, "Half-angle between the two stars of the spin-1 pair state");
  logmap->add_option("--state", lm.state_path, "Base state file (generic tangent frame)");
  logmap->add_option("--resolution", lm.resolution, "Grid points per axis")->capture_default_str();
  logmap->add_option("--projection", lm.projection, "Projected columns: three axes or stereo")
      ->check(CLI::IsMember({"123", "124", "134", "234", "stereo"}))
      ->capture_default_str();
  logmap->fallthrough();

  std::string sa, sb;
  int trajectory = 0;
  auto* sup = app.add_subcommand("superpose", "Normalized a s1 + b s2 with its constellation and star bound");
  sup->add_option("--a", sa, "Weight of s1, RE,IM")->required();
  sup->add_option("--b", sb, "Weight of s2, RE,IM")->required();
  sup->add_option("s1", path, "First state file")->required();
  sup->add_option("s2", path2, "Second state file")->required();
  sup->add_option("--trajectory", trajectory, "Write the two-SC trajectory through the superposition at K+1 values of t in [0, pi]")
      ->check(CLI::Range(1, 1000000));
  sup->fallthrough();

  double scale = 1.0;
  auto* verify = app.add_subcommand("verify", "Run the acceptance property suite");
  verify->add_option("--scale", scale, "Multiply every sample count")->check(CLI::PositiveNumber)->capture_default_str();
  verify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    apply_globals(g);
    if (*stars) return run_stars(g, path);
    if (*state) return run_state(g, path);
    if (*expand) return run_expand(g, path, path2);
    if (*adapted) return run_adapted(g, path);
    if (*hus) return run_husimi(g, path, grid);
    if (*logmap) {
      if (*alpha_opt) lm.alpha = alpha;
      return run_logmap(g, lm);
    }
    if (*sup) return run_superpose(g, sa, sb, path, path2, trajectory);
    if (*verify) return run_verify(g, scale);
  } catch (const Error& e) {
    std::cerr << "majorana: " << e.what() << '\n';
    return e.is_validation() ? kValidation : kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "majorana: " << e.what() << '\n';
    return kNumerical;
  }
  return kValidation;
}
