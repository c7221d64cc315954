#include "vms/app/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace vms::app {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing");
    return x;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: key '" + key + "' expects a number, got '" + v + "'");
  }
}

int to_int(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing");
    return x;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: key '" + key + "' expects an integer, got '" + v + "'");
  }
}

template <typename T, typename F>
std::vector<T> to_list(const std::string& key, const std::string& v, F convert) {
  std::vector<T> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(convert(key, item));
  }
  if (out.empty()) throw std::invalid_argument("config: key '" + key + "' expects a list");
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

std::string fmt(double x) {
  // shortest representation that round-trips
  for (int prec = 6; prec <= 17; ++prec) {
    std::ostringstream os;
    os.precision(prec);
    os << x;
    if (std::stod(os.str()) == x) return os.str();
  }
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::string join_doubles(const std::vector<double>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += fmt(v[i]);
  }
  return s;
}

void check_one_of(const std::string& key, const std::string& v,
                  std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (v == a) return;
  }
  std::string msg = "config: key '" + key + "' must be one of {";
  bool first = true;
  for (const char* a : allowed) {
    if (!first) msg += ", ";
    msg += a;
    first = false;
  }
  msg += "}, got '" + v + "'";
  throw std::invalid_argument(msg);
}

void apply_key(RunConfig& cfg, const std::string& section, const std::string& key,
               const std::string& value) {
  const std::string full = section.empty() ? key : section + "." + key;
  if (section == "run") {
    if (key == "command") {
      check_one_of(full, value, {"convergence", "cavity", "solve"});
      cfg.command = value;
    } else if (key == "scenario") {
      check_one_of(full, value, {"weak_const", "weak_casson_k", "strong_linear_c", "strong_exp_c"});
      cfg.scenario = value;
    } else if (key == "re") {
      cfg.re = to_double(full, value);
    } else if (key == "ndiv") {
      cfg.ndiv = to_list<int>(full, value, to_int);
    } else if (key == "dt") {
      cfg.dt = to_double(full, value);
    } else if (key == "T") {
      cfg.T = to_double(full, value);
    } else if (key == "out_dir") {
      cfg.out_dir = value;
    } else {
      throw std::invalid_argument("config: unknown key '" + full + "'");
    }
  } else if (section == "physics") {
    if (key == "rho") cfg.rho = to_double(full, value);
    else if (key == "alpha") cfg.alpha = to_double(full, value);
    else if (key == "tau_y") cfg.tau_y = to_double(full, value);
    else if (key == "viscosity") {
      check_one_of(full, value, {"constant", "casson_k", "linear_c", "exp_c"});
      cfg.viscosity = value;
    } else if (key == "eta_bar") cfg.eta_bar = to_double(full, value);
    else if (key == "k0") cfg.k0 = to_double(full, value);
    else if (key == "k1") cfg.k1 = to_double(full, value);
    else if (key == "eta0_p") cfg.eta0_p = to_double(full, value);
    else if (key == "K") cfg.K = to_double(full, value);
    else if (key == "A") cfg.A = to_double(full, value);
    else if (key == "B") cfg.B = to_double(full, value);
    else if (key == "diffusion") {
      check_one_of(full, value, {"constant", "variable"});
      cfg.diffusion = value;
    } else if (key == "d_const") cfg.d_const = to_double(full, value);
    else throw std::invalid_argument("config: unknown key '" + full + "'");
  } else if (section == "stabilization") {
    if (key == "c1") cfg.stab.c1 = to_double(full, value);
    else if (key == "c2") cfg.stab.c2 = to_double(full, value);
    else if (key == "c3") cfg.stab.c3 = to_double(full, value);
    else if (key == "eps_j2") cfg.eps_j2 = to_double(full, value);
    else throw std::invalid_argument("config: unknown key '" + full + "'");
  } else if (section == "solver") {
    if (key == "method") {
      check_one_of(full, value, {"auto", "direct", "gmres"});
      cfg.method = value;
    } else if (key == "tol") cfg.tol = to_double(full, value);
    else if (key == "max_iter") cfg.max_iter = to_int(full, value);
    else if (key == "n_picard") cfg.n_picard = to_int(full, value);
    else throw std::invalid_argument("config: unknown key '" + full + "'");
  } else if (section == "cavity") {
    if (key == "re") cfg.cavity_re = to_list<double>(full, value, to_double);
    else if (key == "grid") cfg.cavity_grid = to_int(full, value);
    else if (key == "pseudo_dt") cfg.pseudo_dt = to_double(full, value);
    else if (key == "tol_steady") cfg.tol_steady = to_double(full, value);
    else if (key == "max_steps") cfg.max_steps = to_int(full, value);
    else throw std::invalid_argument("config: unknown key '" + full + "'");
  } else {
    throw std::invalid_argument("config: unknown section '[" + section + "]'");
  }
}

void validate(const RunConfig& cfg) {
  for (int n : cfg.ndiv) {
    if (n < 1) throw std::invalid_argument("config: run.ndiv entries must be >= 1");
  }
  if (cfg.T <= 0.0) throw std::invalid_argument("config: run.T must be positive");
  if (cfg.dt < 0.0) throw std::invalid_argument("config: run.dt must be >= 0 (0 = dt coupled to 1/ndiv)");
  if (cfg.rho <= 0.0) throw std::invalid_argument("config: physics.rho must be positive");
  if (cfg.tau_y < 0.0) throw std::invalid_argument("config: physics.tau_y must be >= 0");
  if (cfg.re <= 0.0) throw std::invalid_argument("config: run.re must be positive");
  if (cfg.command == "cavity" && cfg.cavity_re.empty()) {
    throw std::invalid_argument("config: cavity.re list must not be empty");
  }
  if (cfg.cavity_grid < 2) throw std::invalid_argument("config: cavity.grid must be >= 2");
  if (cfg.n_picard < 1) throw std::invalid_argument("config: solver.n_picard must be >= 1");
}

}  // namespace

std::string RunConfig::to_text() const {
  std::ostringstream os;
  os << "[run]\n";
  os << "command = " << command << "\n";
  os << "scenario = " << scenario << "\n";
  os << "re = " << fmt(re) << "\n";
  os << "ndiv = " << join_ints(ndiv) << "\n";
  os << "dt = " << fmt(dt) << "\n";
  os << "T = " << fmt(T) << "\n";
  os << "out_dir = " << out_dir << "\n";
  os << "\n[physics]\n";
  os << "rho = " << fmt(rho) << "\n";
  os << "alpha = " << fmt(alpha) << "\n";
  os << "tau_y = " << fmt(tau_y) << "\n";
  os << "viscosity = " << viscosity << "\n";
  os << "eta_bar = " << fmt(eta_bar) << "\n";
  os << "k0 = " << fmt(k0) << "\n";
  os << "k1 = " << fmt(k1) << "\n";
  os << "eta0_p = " << fmt(eta0_p) << "\n";
  os << "K = " << fmt(K) << "\n";
  os << "A = " << fmt(A) << "\n";
  os << "B = " << fmt(B) << "\n";
  os << "diffusion = " << diffusion << "\n";
  os << "d_const = " << fmt(d_const) << "\n";
  os << "\n[stabilization]\n";
  os << "c1 = " << fmt(stab.c1) << "\n";
  os << "c2 = " << fmt(stab.c2) << "\n";
  os << "c3 = " << fmt(stab.c3) << "\n";
  os << "eps_j2 = " << fmt(eps_j2) << "\n";
  os << "\n[solver]\n";
  os << "method = " << method << "\n";
  os << "tol = " << fmt(tol) << "\n";
  os << "max_iter = " << max_iter << "\n";
  os << "n_picard = " << n_picard << "\n";
  os << "\n[cavity]\n";
  os << "re = " << join_doubles(cavity_re) << "\n";
  os << "grid = " << cavity_grid << "\n";
  os << "pseudo_dt = " << fmt(pseudo_dt) << "\n";
  os << "tol_steady = " << fmt(tol_steady) << "\n";
  os << "max_steps = " << max_steps << "\n";
  return os.str();
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::istringstream is(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']') {
        throw std::invalid_argument("config: malformed section header at line " +
                                    std::to_string(lineno));
      }
      section = trim(t.substr(1, t.size() - 2));
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: expected 'key = value' at line " +
                                  std::to_string(lineno) + ": '" + t + "'");
    }
    apply_key(cfg, section, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  validate(cfg);
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

RunConfig preset(const std::string& name) {
  RunConfig cfg;
  auto weak_const = [&](double re) {
    cfg.command = "convergence";
    cfg.scenario = "weak_const";
    cfg.re = re;
    cfg.viscosity = "constant";
    cfg.eta_bar = 1.0 / re;
    cfg.tau_y = 0.0;
  };
  if (name == "weak_const_re100") {
    weak_const(100.0);
  } else if (name == "weak_const_re500") {
    weak_const(500.0);
  } else if (name == "weak_const_re5000") {
    weak_const(5000.0);
  } else if (name == "weak_const_re10000") {
    weak_const(10000.0);
  } else if (name == "weak_const_re50000") {
    weak_const(50000.0);
  } else if (name == "weak_casson_k") {
    cfg.command = "convergence";
    cfg.scenario = "weak_casson_k";
    cfg.viscosity = "casson_k";
  } else if (name == "strong_linear_c") {
    cfg.command = "convergence";
    cfg.scenario = "strong_linear_c";
    cfg.viscosity = "linear_c";
    cfg.diffusion = "variable";
    cfg.ndiv = {10, 20, 40};
  } else if (name == "strong_exp_c") {
    cfg.command = "convergence";
    cfg.scenario = "strong_exp_c";
    cfg.viscosity = "exp_c";
    cfg.diffusion = "variable";
    cfg.ndiv = {10, 20, 40};
  } else if (name == "cavity") {
    cfg.command = "cavity";
  } else if (name == "smoke") {
    cfg.command = "convergence";
    cfg.scenario = "weak_const";
    cfg.re = 100.0;
    cfg.eta_bar = 0.01;
    cfg.ndiv = {5, 10};
  } else {
    throw std::invalid_argument("unknown preset '" + name + "'");
  }
  return cfg;
}

std::vector<std::string> preset_names() {
  return {"weak_const_re100", "weak_const_re500",  "weak_const_re5000",
          "weak_const_re10000", "weak_const_re50000", "weak_casson_k",
          "strong_linear_c",  "strong_exp_c",      "cavity",
          "smoke"};
}

ManufacturedCase case_from_config(const RunConfig& cfg) {
  ManufacturedCase mc;
  mc.tag = scenario_from_name(cfg.scenario);
  mc.name = cfg.scenario;
  mc.coeffs.rho = cfg.rho;
  mc.coeffs.alpha = cfg.alpha;

  ViscosityModel& visc = mc.coeffs.viscosity;
  if (cfg.viscosity == "constant") visc.variant = ViscosityVariant::constant;
  else if (cfg.viscosity == "casson_k") visc.variant = ViscosityVariant::casson_k;
  else if (cfg.viscosity == "linear_c") visc.variant = ViscosityVariant::linear_c;
  else visc.variant = ViscosityVariant::exp_c;
  visc.eta_bar = cfg.eta_bar;
  visc.k0 = cfg.k0;
  visc.k1 = cfg.k1;
  visc.eta0_p = cfg.eta0_p;
  visc.K = cfg.K;
  visc.A = cfg.A;
  visc.B = cfg.B;
  visc.tau_y = cfg.tau_y;
  visc.eps_j2 = cfg.eps_j2;
  if (mc.tag == ScenarioTag::weak_const && cfg.viscosity == "constant") {
    visc.eta_bar = cfg.rho / cfg.re;  // eta = rho U L / Re, U = L = 1
  }

  if (cfg.diffusion == "variable") {
    set_variable_diffusion(mc.coeffs);
  } else {
    mc.coeffs.D1 = constant_field(cfg.d_const);
    mc.coeffs.D2 = constant_field(cfg.d_const);
    mc.coeffs.dD1_dx = zero_field();
    mc.coeffs.dD2_dy = zero_field();
  }
  attach_manufactured_forcing(mc);
  return mc;
}

LinearOptions linear_options_for(const RunConfig& cfg, int n_div) {
  LinearOptions lin;
  if (cfg.method == "direct") lin.method = LinearMethod::direct_lu;
  else if (cfg.method == "gmres") lin.method = LinearMethod::gmres_ilu;
  else lin.method = default_method_for(n_div);
  lin.tol = cfg.tol;
  lin.max_iter = cfg.max_iter;
  return lin;
}

}  // namespace vms::app
