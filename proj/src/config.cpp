#include "hyperwalk/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hyperwalk/errors.hpp"

namespace hyperwalk {

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw ContractViolation("number formatting failed");
  return std::string(buf, ptr);
}

std::string katz_evaluation_name(KatzEvaluation k) {
  switch (k) {
    case KatzEvaluation::kAuto: return "auto";
    case KatzEvaluation::kClosedForm: return "closed";
    case KatzEvaluation::kTruncated: return "truncated";
  }
  return "auto";
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
T parse_scalar(const std::string& key, const std::string& text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParameterError("invalid value '" + text + "' for " + key);
  return value;
}

template <typename T>
std::vector<T> parse_list(const std::string& key, const std::string& value) {
  std::vector<T> out;
  for (const auto& item : split_list(value)) out.push_back(parse_scalar<T>(key, item));
  return out;
}

template <typename T, typename Fmt>
std::string join(const std::vector<T>& items, Fmt fmt) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += fmt(items[i]);
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ParameterError("invalid boolean '" + value + "' for " + key);
}

}  // namespace

void set_config_value(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "datasets" || key == "dataset") c.datasets = split_list(value);
  else if (key == "methods") {
    c.methods.clear();
    for (const auto& m : split_list(value)) c.methods.push_back(parse_method(m));
  } else if (key == "alpha") c.alphas = parse_list<double>(key, value);
  else if (key == "lambda") c.lambda = parse_scalar<int>(key, value);
  else if (key == "rho") c.rhos = parse_list<double>(key, value);
  else if (key == "trials") c.trials = parse_scalar<int>(key, value);
  else if (key == "seed") c.seed = parse_scalar<std::uint64_t>(key, value);
  else if (key == "k_grid") c.k_grid = parse_list<int>(key, value);
  else if (key == "beta_grid") c.beta_grid = parse_list<double>(key, value);
  else if (key == "folds") c.folds = parse_scalar<int>(key, value);
  else if (key == "out") c.out = value;
  else if (key == "threads") c.threads = parse_scalar<int>(key, value);
  else if (key == "min_cardinality") c.min_cardinality = parse_scalar<std::size_t>(key, value);
  else if (key == "label_mode") c.label_mode = parse_bool(key, value);
  else if (key == "drop_threshold") c.drop_threshold = parse_scalar<double>(key, value);
  else if (key == "katz") {
    if (value == "auto") c.katz = KatzEvaluation::kAuto;
    else if (value == "closed") c.katz = KatzEvaluation::kClosedForm;
    else if (value == "truncated") c.katz = KatzEvaluation::kTruncated;
    else throw ParameterError("katz must be auto, closed or truncated");
  } else if (key == "katz_terms") c.katz_terms = parse_scalar<int>(key, value);
  else throw ParameterError("unknown configuration key '" + key + "'");
}

void RunConfig::validate() const {
  if (methods.empty()) throw ParameterError("methods: at least one method required");
  if (alphas.empty()) throw ParameterError("alpha: at least one value required");
  for (double a : alphas)
    if (!(a > 0.0 && a < 1.0)) throw ParameterError("alpha: values must lie in (0, 1)");
  if (lambda < 1) throw ParameterError("lambda: must be >= 1");
  if (rhos.empty()) throw ParameterError("rho: at least one value required");
  for (double r : rhos)
    if (!(r > 0.0 && r < 1.0)) throw ParameterError("rho: values must lie in (0, 1)");
  if (trials < 1) throw ParameterError("trials: must be >= 1");
  if (k_grid.empty()) throw ParameterError("k_grid: at least one value required");
  for (int k : k_grid)
    if (k < 1) throw ParameterError("k_grid: values must be >= 1");
  if (beta_grid.empty()) throw ParameterError("beta_grid: at least one value required");
  for (double b : beta_grid)
    if (!(b > 0.0)) throw ParameterError("beta_grid: values must be positive");
  if (folds < 2) throw ParameterError("folds: must be >= 2");
  if (threads < 0) throw ParameterError("threads: must be >= 0");
  if (min_cardinality < 2) throw ParameterError("min_cardinality: must be >= 2");
  if (!(drop_threshold >= 0.0)) throw ParameterError("drop_threshold: must be >= 0");
  if (katz_terms < 1) throw ParameterError("katz_terms: must be >= 1");
}

ExperimentConfig RunConfig::experiment(double rho, double alpha) const {
  ExperimentConfig e;
  e.split.observed_fraction = rho;
  e.split.trials = trials;
  e.split.seed = seed;
  e.sampling.alpha = alpha;
  e.sampling.lambda = lambda;
  e.methods = methods;
  e.k_grid = k_grid;
  e.beta_grid = beta_grid;
  e.cv.folds = folds;
  e.cv.walk.drop_threshold = drop_threshold;
  e.cv.katz = katz;
  e.cv.katz_terms = katz_terms;
  return e;
}

LoadOptions RunConfig::load_options() const {
  LoadOptions o;
  o.label_mode = label_mode;
  o.min_cardinality = min_cardinality;
  return o;
}

std::string result_text(const RunConfig& c) {
  std::ostringstream out;
  out << "datasets = " << join(c.datasets, [](const std::string& s) { return s; }) << '\n'
      << "methods = " << join(c.methods, [](Method m) { return std::string(method_name(m)); }) << '\n'
      << "alpha = " << join(c.alphas, format_number) << '\n'
      << "lambda = " << c.lambda << '\n'
      << "rho = " << join(c.rhos, format_number) << '\n'
      << "trials = " << c.trials << '\n'
      << "seed = " << c.seed << '\n'
      << "k_grid = " << join(c.k_grid, [](int k) { return std::to_string(k); }) << '\n'
      << "beta_grid = " << join(c.beta_grid, format_number) << '\n'
      << "folds = " << c.folds << '\n'
      << "min_cardinality = " << c.min_cardinality << '\n'
      << "label_mode = " << (c.label_mode ? "true" : "false") << '\n'
      << "drop_threshold = " << format_number(c.drop_threshold) << '\n'
      << "katz = " << katz_evaluation_name(c.katz) << '\n'
      << "katz_terms = " << c.katz_terms << '\n';
  return out.str();
}

std::string to_text(const RunConfig& c) {
  return result_text(c) + "out = " + c.out + "\nthreads = " + std::to_string(c.threads) + "\n";
}

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected 'key = value'");
    try {
      set_config_value(c, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const ParameterError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace hyperwalk
