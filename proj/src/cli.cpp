#include "digifix/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "digifix/acceptance.hpp"
#include "digifix/error.hpp"
#include "digifix/geometry.hpp"
#include "digifix/homotopy.hpp"
#include "digifix/io.hpp"
#include "digifix/lasso.hpp"
#include "digifix/report.hpp"
#include "digifix/retracts.hpp"
#include "digifix/spectrum.hpp"

namespace digifix {

using nlohmann::json;

namespace {

struct Settings {
  unsigned threads = 0;
  std::optional<std::uint64_t> budget;
  std::string format;
  std::string output;

  std::string image;
  std::string map;
  std::optional<Vertex> point;
  std::string subset;
  std::optional<std::size_t> max_loop;
  std::optional<Vertex> from;
  std::optional<Vertex> to;
  std::string family;
  std::vector<int> params;
  std::vector<int> only;
};

std::uint64_t default_budget() {
  const char* env = std::getenv(kBudgetEnv);
  if (env == nullptr || *env == '\0') return kDefaultNodeBudget;
  char* end = nullptr;
  const auto v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw InvalidInput(std::string(kBudgetEnv) + " must be a positive integer");
  return v;
}

json to_json(const Spectrum& s) { return s.values(); }
json to_json(std::span<const Vertex> t) { return std::vector<Vertex>(t.begin(), t.end()); }
json to_json(const SelfMap& f) { return to_json(f.targets()); }

std::vector<Vertex> parse_subset(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("--subset expects comma-separated vertex indices, got '" + text + "'");
    out.push_back(static_cast<Vertex>(std::stoul(item)));
  }
  if (out.empty()) throw InvalidInput("--subset is empty");
  return out;
}

class Runner {
 public:
  Runner(const Settings& s, std::uint64_t budget) : s_(s), budget_(budget) {}

  Report run(const std::string& command) {
    report_.command = command;
    digest_input_["command"] = command;
    digest_input_["budget"] = budget_;
    if (command == "spectrum") spectrum();
    else if (command == "sfix") sfix();
    else if (command == "rigid") rigid();
    else if (command == "pull") pull();
    else if (command == "classes") classes();
    else if (command == "fixset") fixset();
    else if (command == "lasso") lasso();
    else if (command == "retract") retract();
    else if (command == "criterion") criterion();
    report_.input_digest = sha256_hex(io::canonical(digest_input_));
    return report_;
  }

 private:
  SearchOptions search() const { return {s_.threads, budget_}; }
  HomotopyOptions homotopy() const {
    HomotopyOptions o;
    o.threads = s_.threads;
    o.node_budget = budget_;
    return o;
  }

  const DigitalImage& image() {
    if (!x_) {
      x_ = io::load_image(s_.image);
      digest_input_["image"] = io::image_to_json(*x_);
    }
    return *x_;
  }

  SelfMap map() {
    if (s_.map.empty()) throw InvalidInput("--map is required");
    auto f = io::load_map(s_.map);
    if (f.size() != image().size())
      throw InvalidInput("map has " + std::to_string(f.size()) + " targets, image has " +
                         std::to_string(image().size()) + " vertices");
    digest_input_["map"] = io::map_to_json(f);
    return f;
  }

  void require_continuous(const SelfMap& f) {
    if (!is_continuous(image(), f)) throw InvalidInput("map is not continuous on '" + image().name() + "'");
  }

  void spectrum() {
    auto r = fixed_point_spectrum(image(), search());
    report_.result = {{"spectrum", to_json(r.spectrum)}};
    report_.stats = r.stats;
  }

  void sfix() {
    const auto& x = image();
    const auto f = map();
    require_continuous(f);
    const auto start = std::chrono::steady_clock::now();
    const auto cls = homotopy_class(x, f, homotopy());
    report_.stats.maps_enumerated = cls.size;
    report_.stats.truncated = !cls.complete;
    report_.stats.elapsed = std::chrono::steady_clock::now() - start;
    report_.result = {{"spectrum", to_json(cls.fix_counts)},
                      {"min", cls.min_fixed()},
                      {"max", cls.max_fixed()},
                      {"fixed", fix_count(f)},
                      {"class_size", cls.size},
                      {"complete", cls.complete}};
  }

  void rigid() {
    const auto& x = image();
    if (!s_.map.empty()) {
      const auto f = map();
      require_continuous(f);
      report_.result = {{"rigid", is_rigid_map(x, f, budget_)}, {"vertices", x.size()}, {"fixed", fix_count(f)}};
      return;
    }
    const auto breaker = rigidity_breaker(x, budget_);
    report_.result = {{"rigid", !breaker}, {"vertices", x.size()}, {"breaker", breaker ? to_json(*breaker) : json()}};
  }

  void pull() {
    const auto& x = image();
    std::vector<PullResult> results;
    if (s_.point) {
      digest_input_["point"] = *s_.point;
      results.push_back(pull_index(x, *s_.point, search()));
    } else {
      results = pull_indices(x, search());
    }
    json rows = json::array();
    std::optional<std::size_t> lowest;
    for (const auto& p : results) {
      rows.push_back({{"point", p.point},
                      {"value", p.value ? json(*p.value) : json()},
                      {"witness", p.witness ? to_json(*p.witness) : json()}});
      if (p.value && (!lowest || *p.value < *lowest)) lowest = *p.value;
      report_.stats += p.stats;
    }
    report_.result = {{"pull", rows}, {"min", lowest ? json(*lowest) : json()}};
  }

  void classes() {
    const auto start = std::chrono::steady_clock::now();
    const auto all = homotopy_classes(image(), homotopy());
    json rows = json::array();
    Spectrum total;
    for (const auto& c : all) {
      rows.push_back({{"representative", to_json(c.representative)},
                      {"size", c.size},
                      {"spectrum", to_json(c.fix_counts)}});
      total = total.united(c.fix_counts);
      report_.stats.maps_enumerated += c.size;
    }
    report_.stats.elapsed = std::chrono::steady_clock::now() - start;
    report_.result = {{"count", all.size()}, {"classes", rows}, {"spectrum", to_json(total)}};
  }

  void fixset() {
    const auto& x = image();
    const auto f = map();
    require_continuous(f);
    const auto structure = fix_structure(x, f);
    const auto forced = forced_fixed_points(x, f);
    static const char* kinds[] = {"empty", "connected", "disconnected"};
    json violations = json::array();
    for (const auto& v : articulation_check(x, f)) violations.push_back({v.articulation_point, v.fixed_a, v.fixed_b});
    report_.result = {{"fixed", fix(f)},
                      {"structure", kinds[static_cast<int>(structure.kind)]},
                      {"components", structure.components},
                      {"image_is_cycle", structure.image_is_cycle},
                      {"cycle_refinement_holds", structure.cycle_refinement_holds},
                      {"forced", forced.forced},
                      {"forced_confirmed", forced.confirmed},
                      {"articulation_points", articulation_points(x)},
                      {"articulation_violations", violations}};
  }

  static json lasso_json(std::pair<Vertex, Vertex> pair, const Lasso& l) {
    return {{"pair", {pair.first, pair.second}}, {"path", l.path}, {"loop", l.loop}};
  }

  void lasso() {
    const auto& x = image();
    LassoOptions options;
    options.max_loop = s_.max_loop;
    options.threads = s_.threads;
    if (s_.max_loop) digest_input_["max_loop"] = *s_.max_loop;
    if (s_.from || s_.to) {
      if (!s_.from || !s_.to) throw InvalidInput("--from and --to go together");
      digest_input_["pair"] = {*s_.from, *s_.to};
      const auto found = find_lasso(x, *s_.from, *s_.to, options);
      report_.result = {{"found", found.has_value()},
                        {"lasso", found ? lasso_json({*s_.from, *s_.to}, *found) : json()}};
      return;
    }
    const auto cert = lasso_rigidity_certificate(x, options);
    json lassos = json::array();
    for (const auto& [pair, l] : cert.lassos) lassos.push_back(lasso_json(pair, l));
    json missing = json::array();
    for (auto [a, b] : cert.missing) missing.push_back({a, b});
    report_.result = {{"certified", cert.certified}, {"lassos", lassos}, {"missing", missing}};
  }

  void retract() {
    const auto& x = image();
    if (s_.subset.empty()) throw InvalidInput("--subset is required");
    auto subset = parse_subset(s_.subset);
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    digest_input_["subset"] = subset;
    const auto w = find_retraction(x, subset, search());
    json deformation;
    if (w) {
      switch (is_deformation_retraction(x, *w, homotopy())) {
        case Membership::member: deformation = "yes"; break;
        case Membership::not_member: deformation = "no"; break;
        case Membership::inconclusive: deformation = "inconclusive"; break;
      }
    }
    report_.result = {{"subset", subset},
                      {"retract", w.has_value()},
                      {"map", w ? to_json(w->map) : json()},
                      {"deformation", deformation}};
  }

  void criterion() {
    const auto& x = image();
    const auto pair = nminus1_criterion(x);
    report_.result = {{"holds", pair.has_value()},
                      {"pair", pair ? json({pair->first, pair->second}) : json()},
                      {"map", pair ? to_json(nminus1_map(x.size(), *pair)) : json()}};
  }

  const Settings& s_;
  std::uint64_t budget_;
  std::optional<DigitalImage> x_;
  json digest_input_ = json::object();
  Report report_;
};

void emit(const std::string& text, const Settings& s, std::ostream& out) {
  if (s.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(s.output);
  if (!file) throw InvalidInput("cannot write '" + s.output + "'");
  file << text;
}

int run_verify(const Settings& s, std::uint64_t budget, std::ostream& out) {
  AcceptanceOptions options;
  options.threads = s.threads;
  options.node_budget = budget;
  options.only.insert(s.only.begin(), s.only.end());
  const auto format = parse_report_format(s.format.empty() ? "text" : s.format);
  std::ostringstream text;
  auto& sink = s.output.empty() && format == ReportFormat::text ? out : text;
  const auto results = run_acceptance(options, [&](const CriterionResult& r) {
    if (format == ReportFormat::text) {
      sink << format_criterion(r);
      sink.flush();
    }
  });
  const bool all = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
  if (format == ReportFormat::text) {
    sink << (all ? "all criteria passed\n" : "some criteria FAILED\n");
    if (&sink == &text) emit(text.str(), s, out);
  } else {
    Report report;
    report.command = "verify";
    json rows = json::array();
    for (const auto& r : results)
      rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"failures", r.failures}});
    report.result = {{"criteria", rows}, {"passed", all}};
    report.input_digest = sha256_hex(io::canonical({{"command", "verify"}, {"only", s.only}}));
    emit(write_report(report, format), s, out);
  }
  return all ? kExitOk : kExitVerifyFailed;
}

int run_gen(const Settings& s, std::ostream& out) {
  const auto x = generate(s.family, s.params);
  if (s.output.empty()) {
    out << io::image_to_json(x).dump(1) << '\n';
  } else {
    io::save_image(s.output, x);
  }
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Fixed point sets of digital images", "digifix"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", s.threads, "worker threads (0: one per core)");
  app.add_option("--budget", s.budget, "search node budget (default from " + std::string(kBudgetEnv) + ")")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", s.format, "report format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("-o,--output", s.output, "output file (the image for gen, the report otherwise)");

  auto* gen = app.add_subcommand("gen", "write a named image: " + [] {
    std::string names;
    for (const auto& f : generator_families()) names += (names.empty() ? "" : ", ") + f;
    return names;
  }());
  gen->add_option("family", s.family)->required();
  gen->add_option("params", s.params);

  auto with_image = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("image", s.image, "image file")->required();
    return sub;
  };
  with_image("spectrum", "fixed point spectrum F(X)");
  with_image("sfix", "S(f) over the homotopy class of a map")->add_option("--map", s.map)->required();
  with_image("rigid", "rigidity of the image, or of a map with --map")->add_option("--map", s.map);
  with_image("pull", "pull indices")->add_option("--point", s.point);
  with_image("classes", "homotopy classes of all continuous self-maps");
  with_image("fixset", "structure of Fix(f)")->add_option("--map", s.map)->required();
  auto* lasso = with_image("lasso", "lasso rigidity certificate");
  lasso->add_option("--max-loop", s.max_loop);
  lasso->add_option("--from", s.from);
  lasso->add_option("--to", s.to);
  with_image("retract", "retraction onto a vertex subset")->add_option("--subset", s.subset)->required();
  with_image("criterion", "whether N(x) is inside N*(x') for some x != x'");
  app.add_subcommand("verify", "run the acceptance suite")->add_option("--only", s.only, "criterion numbers");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const auto budget = s.budget.value_or(default_budget());
    const std::string command = app.get_subcommands().front()->get_name();
    if (command == "gen") return run_gen(s, out);
    if (command == "verify") return run_verify(s, budget, out);
    const auto report = Runner(s, budget).run(command);
    emit(write_report(report, parse_report_format(s.format.empty() ? "json" : s.format)), s, out);
    return kExitOk;
  } catch (const ResourceExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace digifix
