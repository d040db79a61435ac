#include "branchdim/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "branchdim/analyses.hpp"
#include "branchdim/chain_cache.hpp"
#include "branchdim/error.hpp"
#include "branchdim/weights.hpp"
#include "branchdim/wordparse.hpp"

namespace branchdim::cli {

namespace {

struct Args {
  CliConfig config;
  std::size_t max_level = 0;
  std::size_t level = 0;
  std::string word;
  std::string vertex;
  std::string cache_action;
  std::size_t jobs = 1;
  std::size_t samples = 1000;
  std::uint64_t seed = 2021;
};

GroupDefPtr load_group(const CliConfig& config) {
  if (config.group_file.empty()) return grigorchuk2();
  return load_group_def(config.group_file);
}

QuotientOptions quotient_options(const CliConfig& config) { return {config.level_cap, config.cache_dir}; }

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

std::string join(const std::vector<std::string>& parts, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

int cmd_order(const Args& a, std::ostream& out) {
  const auto def = load_group(a.config);
  if (a.max_level > a.config.level_cap)
    throw ResourceError("level " + std::to_string(a.max_level) + " exceeds the chain cap " +
                        std::to_string(a.config.level_cap));
  const auto opts = quotient_options(a.config);
  std::vector<std::string> logs;
  Json orders = Json::array();
  Json log2s = Json::array();
  for (std::size_t n = 1; n <= a.max_level; ++n) {
    const BigInt order = quotient(def, n, opts).order();
    const auto lg = exact_log2(order);
    logs.push_back(lg ? std::to_string(*lg) : "?" + to_string(order));
    log2s.push_back(lg ? Json(*lg) : Json(nullptr));
    orders.push_back(to_string(order));
  }
  if (a.config.json) {
    emit(out, {{"command", "order"}, {"max_level", a.max_level}, {"log2_orders", log2s}, {"orders", orders}});
  } else {
    out << join(logs) << '\n';
  }
  return kOk;
}

int cmd_dimension(const Args& a, std::ostream& out) {
  const auto series = hausdorff_series(a.max_level);
  const Rational limit = hausdorff_limit();
  if (a.config.json) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < series.size(); ++i)
      rows.push_back({{"n", i + 1}, {"ratio", to_string(series[i])}, {"decimal", to_double(series[i])}});
    emit(out, {{"command", "dimension"},
               {"limit", to_string(limit)},
               {"limit_decimal", to_double(limit)},
               {"series", rows},
               {"denominator", "log4 |Gamma_n| = (4^n - 1)/3 exactly; the 4^n/3 form has the same limit"}});
  } else {
    out << "limit " << to_string(limit) << '\n';
    for (std::size_t i = 0; i < series.size(); ++i)
      out << (i + 1) << ' ' << to_string(series[i]) << ' ' << std::setprecision(12) << to_double(series[i]) << '\n';
  }
  return kOk;
}

int cmd_verify(const Args& a, std::ostream& out) {
  QuotientTower tower(load_group(a.config), quotient_options(a.config));
  SuiteOptions opts;
  opts.order_levels = std::min<std::size_t>(4, a.config.level_cap);
  opts.samples = a.samples;
  opts.seed = a.seed;
  opts.jobs = a.jobs;
  const auto reports = run_suite(tower, a.config.suite, opts);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  if (a.config.json) {
    emit(out, to_json(reports, a.config.suite));
  } else {
    for (const auto& r : reports) out << r.summary() << '\n';
    out << (ok ? "all checks passed" : "verification failed") << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_weights(const Args& a, std::ostream& out) {
  const auto def = load_group(a.config);
  const Element g = parse_word(a.word, def);
  const BWord bw = to_b_word(g);
  const WeightVector w = weight_vector(g);
  if (a.config.json) {
    emit(out, {{"command", "weights"},
               {"word", format_element(g)},
               {"b_word", format_b_word(bw)},
               {"weights", {w.r[0], w.r[1], w.r[2], w.r[3]}},
               {"total", w.total()},
               {"st2_criterion", st2_test(g)},
               {"st3_necessary_condition", st3_weight_check(g)}});
  } else {
    out << "b-word " << format_b_word(bw) << '\n'
        << "weights " << w.str() << '\n'
        << "total " << int(w.total()) << '\n'
        << "st2 " << (st2_test(g) ? "yes" : "no") << '\n';
  }
  return kOk;
}

int cmd_section(const Args& a, std::ostream& out) {
  const auto def = load_group(a.config);
  const Element g = parse_word(a.word, def);
  const Vertex v = Vertex::parse(a.vertex, def->d());
  const Element s = section_at(g, v);
  if (a.config.json) {
    emit(out, {{"command", "section"}, {"word", format_element(g)}, {"vertex", v.cli_str()}, {"section", format_element(s)}});
  } else {
    out << format_element(s) << '\n';
  }
  return kOk;
}

int cmd_act(const Args& a, std::ostream& out) {
  const auto def = load_group(a.config);
  const Element g = parse_word(a.word, def);
  const Vertex v = Vertex::parse(a.vertex, def->d());
  const Vertex image = act(g, v);
  if (a.config.json) {
    emit(out, {{"command", "act"}, {"word", format_element(g)}, {"vertex", v.cli_str()}, {"image", image.cli_str()}});
  } else {
    out << image.cli_str() << '\n';
  }
  return kOk;
}

int cmd_is_identity(const Args& a, std::ostream& out) {
  const auto def = load_group(a.config);
  const Element g = parse_word(a.word, def);
  const bool trivial = is_identity(g);
  if (a.config.json) {
    emit(out, {{"command", "is-identity"}, {"word", format_element(g)}, {"identity", trivial}});
  } else {
    out << (trivial ? "true" : "false") << '\n';
  }
  return kOk;
}

int cmd_orbit(const Args& a, std::ostream& out) {
  const auto def = load_group(a.config);
  const std::size_t d = def->d();
  Vertex start;
  if (a.vertex.empty()) {
    start = Vertex(std::vector<std::uint8_t>(a.level, 1));
  } else {
    start = Vertex::parse(a.vertex, d);
    if (start.level() != a.level) throw DomainError("vertex " + start.cli_str() + " is not on level " + std::to_string(a.level));
  }
  const auto images = generator_images(*def, a.level, std::max<std::size_t>(a.config.level_cap, kDefaultLevelCap));
  const auto points = orbit(images, static_cast<Point>(vertex_rank(start, d).rank));
  std::vector<std::string> words;
  for (const auto p : points) words.push_back(rank_vertex({a.level, p}, d).cli_str());
  if (a.config.json) {
    emit(out, {{"command", "orbit"}, {"level", a.level}, {"vertex", start.cli_str()}, {"size", words.size()},
               {"level_size", power(d, a.level)}, {"orbit", words}});
  } else {
    out << words.size() << '\n' << join(words) << '\n';
  }
  return kOk;
}

int cmd_element_order(const Args& a, std::ostream& out) {
  const auto def = load_group(a.config);
  const Element g = parse_word(a.word, def);
  const BigInt order = element_order_in_quotient(g, a.level, a.config.level_cap);
  if (a.config.json) {
    emit(out, {{"command", "element-order"}, {"word", format_element(g)}, {"level", a.level}, {"order", to_string(order)}});
  } else {
    out << to_string(order) << '\n';
  }
  return kOk;
}

int cmd_cache(const Args& a, std::ostream& out) {
  if (a.config.cache_dir.empty()) throw DomainError("no cache directory: pass --cache-dir or set BRANCHDIM_CACHE_DIR");
  const ChainCache cache(a.config.cache_dir);
  if (a.cache_action == "clear") {
    const std::size_t removed = cache.clear();
    if (a.config.json)
      emit(out, {{"command", "cache clear"}, {"directory", a.config.cache_dir.string()}, {"removed", removed}});
    else
      out << "removed " << removed << '\n';
  } else {
    const auto info = cache.info();
    if (a.config.json)
      emit(out, {{"command", "cache info"}, {"directory", a.config.cache_dir.string()}, {"files", info.files}, {"bytes", info.bytes}});
    else
      out << "directory " << a.config.cache_dir.string() << '\n'
          << "files " << info.files << '\n'
          << "bytes " << info.bytes << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Args a;
  if (const char* env = std::getenv("BRANCHDIM_CACHE_DIR")) a.config.cache_dir = env;

  CLI::App app{"Congruence quotients, weights and Hausdorff dimension of branch groups", "branchdim"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--group", a.config.group_file, "Group definition file (default: bundled grigorchuk2.grp)")
      ->check(CLI::ExistingFile);
  app.add_option("--level-cap", a.config.level_cap, "Deepest level for stabilizer chains")
      ->check(CLI::Range(1, 6))
      ->capture_default_str();
  app.add_option("--cache-dir", a.config.cache_dir, "Chain cache directory (default: $BRANCHDIM_CACHE_DIR)");
  app.add_flag("--json", a.config.json, "Emit one JSON document");

  std::map<CLI::App*, int (*)(const Args&, std::ostream&)> handlers;
  auto add = [&](const char* name, const char* help, auto handler) {
    CLI::App* sub = app.add_subcommand(name, help);
    handlers[sub] = handler;
    return sub;
  };

  auto* order = add("order", "log2 |G_n| for n = 1..max-level", cmd_order);
  a.max_level = 4;
  order->add_option("--max-level", a.max_level, "Deepest level")->check(CLI::Range(1, 6))->capture_default_str();

  auto* dimension = add("dimension", "Hausdorff dimension series and limit", cmd_dimension);
  dimension->add_option("--max-level", a.max_level, "Number of series terms")->check(CLI::Range(1, 60));

  auto* verify = add("verify", "Run a verification suite", cmd_verify);
  verify->add_option("--suite", a.config.suite, "Suite name")
      ->check(CLI::IsMember(suite_names()))
      ->capture_default_str();
  verify->add_option("--jobs", a.jobs, "Checks run concurrently")->check(CLI::Range(1, 64));
  verify->add_option("--samples", a.samples, "Random samples for the weight checks")->check(CLI::Range(1, 1000000));
  verify->add_option("--seed", a.seed, "Seed for the weight checks");

  auto* weights = add("weights", "b-word and weight vector of an element of St(1)", cmd_weights);
  weights->add_option("word", a.word, "Group word")->required();

  auto* section = add("section", "Section of a word at a vertex", cmd_section);
  section->add_option("word", a.word, "Group word")->required();
  section->add_option("vertex", a.vertex, "Vertex, '@' for the root")->required();

  auto* act_cmd = add("act", "Image of a vertex under a word", cmd_act);
  act_cmd->add_option("word", a.word, "Group word")->required();
  act_cmd->add_option("vertex", a.vertex, "Vertex, '@' for the root")->required();

  auto* identity = add("is-identity", "Decide whether a word is trivial", cmd_is_identity);
  identity->add_option("word", a.word, "Group word")->required();

  auto* orbit_cmd = add("orbit", "Orbit of a level-n vertex", cmd_orbit);
  orbit_cmd->add_option("--level", a.level, "Level")->required()->check(CLI::Range(0, 6));
  orbit_cmd->add_option("--vertex", a.vertex, "Start vertex (default 1...1)");

  auto* element_order = add("element-order", "Order of a word in G_n", cmd_element_order);
  element_order->add_option("word", a.word, "Group word")->required();
  element_order->add_option("--level", a.level, "Level")->required()->check(CLI::Range(1, 6));

  auto* cache = add("cache", "Manage the chain cache", cmd_cache);
  cache->add_option("action", a.cache_action, "clear or info")->required()->check(CLI::IsMember({"clear", "info"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  if (dimension->parsed() && dimension->count("--max-level") == 0) a.max_level = 10;

  for (const auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    try {
      return handler(a, out);
    } catch (const ResourceError& e) {
      err << "branchdim: resource limit: " << e.what() << '\n';
      return kResource;
    } catch (const ParseError& e) {
      err << "branchdim: parse error: " << e.what() << '\n';
      return kUsage;
    } catch (const DomainError& e) {
      err << "branchdim: " << e.what() << '\n';
      return kUsage;
    } catch (const std::exception& e) {
      err << "branchdim: internal error: " << e.what() << '\n';
      return kVerificationFailed;
    }
  }
  return kUsage;
}

}  // namespace branchdim::cli
