// dragonfold: generate, render and verify paperfolding polygons.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dragon/dragon.h"
#include "svg.hpp"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LibraryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(dragon_status s) {
  if (s == DRAGON_OK) return;
  std::string msg = std::string(dragon_status_string(s)) + ": " + dragon_last_error();
  if (s == DRAGON_ERR_DOMAIN || s == DRAGON_ERR_INVALID_ARGUMENT) throw UsageError(msg);
  throw LibraryError(msg);
}

template <class T, void (*Destroy)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Destroy(p); }
  T** out() { return &p; }
  T* get() const { return p; }
};

using Polygon = Handle<dragon_polygon, dragon_polygon_destroy>;
using Hull = Handle<dragon_hull, dragon_hull_destroy>;
using Path = Handle<dragon_path, dragon_path_destroy>;
using Contacts = Handle<dragon_contacts, dragon_contacts_destroy>;

struct RunConfig {
  std::string command;
  double alpha = 100.0;
  int level = 10;
  std::string method = "recursive";
  std::string format;
  std::string out;
  std::string suite = "all";
  double tol = 1e-9;
  double contact_tol = 1e-9;
  int samples_per_turn = 720;
  double min_radius = 1e-10;
  int render_samples_per_turn = 360;
  double render_min_radius = 1e-6;
  int samples_per_segment = 9;
  double exclusion = 1e-6;
  unsigned threads = 0;
  bool hull = false;
  bool split = false;
  bool contacts = false;
  double threshold_tol = 1e-6;
  int empirical_level = 10;
  double empirical_tol = 0.01;
  bool skip_empirical = false;
  std::vector<double> alphas;

  json echo() const {
    json j = {{"command", command}};
    if (command == "generate" || command == "render" || command == "verify") {
      j["alpha_deg"] = alpha;
      j["level"] = level;
    }
    if (command == "generate") j["method"] = method;
    if (command == "verify") {
      j["suite"] = suite;
      j["tolerance"] = tol;
      j["samples_per_turn"] = samples_per_turn;
      j["min_radius"] = min_radius;
      j["samples_per_segment"] = samples_per_segment;
      j["exclusion_factor"] = exclusion;
    }
    if (command == "thresholds") {
      j["tolerance_deg"] = threshold_tol;
      j["empirical_level"] = empirical_level;
      j["empirical_tolerance_deg"] = empirical_tol;
    }
    if (command == "table-lemma11") j["alphas"] = alphas;
    j["format"] = format;
    return j;
  }
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw LibraryError("cannot open " + cfg.out + " for writing");
  f << text;
  if (!f) throw LibraryError("failed writing " + cfg.out);
}

// Angles like 41.8805 sit exactly on a decimal half; round those upward.
double half_up3(double v) { return std::floor(v * 1000.0 + 0.5 + 1e-9) / 1000.0; }

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void warn_window(double alpha) {
  if (alpha < 90.0 || alpha > 108.0) {
    std::cerr << "warning: alpha " << alpha
              << " lies outside the hull window [90, 108]; the hull construction does not apply "
                 "there and results are indicative only\n";
  }
}

void make_polygon(const RunConfig& cfg, Polygon& poly) {
  const dragon_generation m =
      cfg.method == "inflation" ? DRAGON_GENERATE_INFLATION : DRAGON_GENERATE_RECURSIVE;
  check(dragon_polygon_create(cfg.alpha, cfg.level, m, poly.out()));
}

int cmd_generate(const RunConfig& cfg) {
  Polygon poly;
  make_polygon(cfg, poly);
  const std::size_t n = dragon_polygon_vertex_count(poly.get());
  const dragon_point* v = dragon_polygon_vertices(poly.get());
  std::string text;
  if (cfg.format == "json") {
    json pts = json::array();
    for (std::size_t i = 0; i < n; ++i) pts.push_back({v[i].x, v[i].y});
    json j = {{"config", cfg.echo()}, {"vertex_count", n}, {"vertices", pts}};
    text = j.dump() + "\n";
  } else {
    text.reserve(n * 48);
    for (std::size_t i = 0; i < n; ++i) {
      text += std::to_string(i) + '\t' + g17(v[i].x) + '\t' + g17(v[i].y) + '\n';
    }
  }
  emit(cfg, text);
  return kExitPass;
}

std::vector<dragon_point> outline(const dragon_hull* h, const RunConfig& cfg) {
  Path path;
  check(dragon_hull_boundary(h, cfg.render_samples_per_turn, cfg.render_min_radius, path.out()));
  const dragon_point* d = dragon_path_data(path.get());
  return {d, d + dragon_path_size(path.get())};
}

int cmd_render(const RunConfig& cfg) {
  warn_window(cfg.alpha);
  Polygon poly;
  make_polygon(cfg, poly);
  const dragon_point* v = dragon_polygon_vertices(poly.get());
  const std::vector<dragon_point> curve(v, v + dragon_polygon_vertex_count(poly.get()));

  struct Layer {
    std::vector<dragon_point> pts;
    std::string cls, stroke, fill;
  };
  std::vector<Layer> layers;
  if (cfg.hull || cfg.split) {
    Hull base;
    check(dragon_hull_create(cfg.alpha, base.out()));
    if (cfg.hull) layers.push_back({outline(base.get(), cfg), "hull", "#1f77b4", "none"});
    if (cfg.split) {
      Hull left, right;
      check(dragon_hull_image(base.get(), DRAGON_PI0, left.out()));
      check(dragon_hull_image(base.get(), DRAGON_PI1, right.out()));
      layers.push_back({outline(left.get(), cfg), "hull-pi0", "#2ca02c", "#2ca02c22"});
      layers.push_back({outline(right.get(), cfg), "hull-pi1", "#d62728", "#d6272822"});
    }
  }

  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  const auto grow = [&](const std::vector<dragon_point>& pts) {
    for (const dragon_point& p : pts) {
      lo_x = std::min(lo_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_x = std::max(hi_x, p.x);
      hi_y = std::max(hi_y, p.y);
    }
  };
  grow(curve);
  for (const Layer& l : layers) grow(l.pts);

  dragonfold::SvgDocument svg(lo_x, lo_y, hi_x, hi_y);
  std::ostringstream note;
  note << "alpha=" << cfg.alpha << " level=" << cfg.level << " y axis flipped by the group transform";
  svg.comment(note.str());
  for (const Layer& l : layers) svg.closed_path(l.pts, l.cls, l.stroke, l.fill, 1.0);
  svg.polyline(curve, "polygon", "#000000", 0.6);

  if (cfg.contacts) {
    Contacts report;
    check(dragon_find_contacts(poly.get(), cfg.contact_tol, cfg.threads, 100000, report.out()));
    const std::size_t count = dragon_contacts_event_count(report.get());
    for (std::size_t i = 0; i < count; ++i) {
      dragon_contact_event e;
      check(dragon_contacts_event(report.get(), i, &e));
      const char* fill = e.kind == DRAGON_PROPER_CROSSING ? "#d62728"
                         : e.kind == DRAGON_ENDPOINT_ON_INTERIOR ? "#ff7f0e"
                                                                 : "#9467bd";
      svg.marker(e.location, std::string("contact ") + dragon_contact_kind_string(e.kind), fill,
                 4.0);
    }
  }
  emit(cfg, svg.str());
  return kExitPass;
}

json verification_json(const char* suite, const dragon_verification& r) {
  return {{"suite", suite},
          {"pass", r.pass != 0},
          {"alpha_deg", r.alpha_deg},
          {"samples", r.samples},
          {"min_margin", r.min_margin},
          {"worst_point", {r.worst_point.x, r.worst_point.y}},
          {"tolerance", r.tolerance}};
}

int cmd_verify(const RunConfig& cfg) {
  warn_window(cfg.alpha);
  const bool all = cfg.suite == "all";
  json results = json::array();
  bool pass = true;
  double min_margin = std::numeric_limits<double>::infinity();

  const auto record = [&](const char* suite, const dragon_verification& r) {
    results.push_back(verification_json(suite, r));
    pass = pass && r.pass;
    min_margin = std::min(min_margin, r.min_margin);
  };

  if (all || cfg.suite == "hull-invariance") {
    dragon_verification r;
    check(dragon_verify_hull_invariance(cfg.alpha, cfg.samples_per_turn, cfg.min_radius, cfg.tol,
                                        &r));
    record("hull-invariance", r);
  }
  if (all || cfg.suite == "containment") {
    dragon_verification r;
    check(dragon_verify_containment(cfg.alpha, cfg.level, cfg.samples_per_segment, 0, cfg.tol,
                                    &r));
    record("containment", r);
  }
  if (all || cfg.suite == "separation") {
    dragon_verification r;
    check(dragon_verify_separation(cfg.alpha, cfg.samples_per_turn, cfg.min_radius, cfg.tol,
                                   cfg.exclusion, &r));
    record("separation", r);
  }
  if (all || cfg.suite == "theorem1") {
    dragon_theorem1_report r;
    check(dragon_theorem1_checks(std::max(cfg.level, 4), cfg.alpha, cfg.samples_per_turn, &r));
    json checks = json::array();
    for (const dragon_theorem1_check& c : r.checks) {
      checks.push_back({{"name", c.name}, {"value", c.value}, {"bound", c.bound},
                        {"pass", c.pass != 0}});
    }
    results.push_back({{"suite", "theorem1"}, {"pass", r.pass != 0}, {"alpha_deg", r.alpha_deg},
                       {"level", r.level}, {"checks", checks}});
    pass = pass && r.pass;
  }

  if (cfg.format == "text") {
    std::ostringstream os;
    for (const json& r : results) {
      os << (r["pass"].get<bool>() ? "PASS" : "FAIL") << '\t' << r["suite"].get<std::string>();
      if (r.contains("min_margin")) os << "\tmin_margin=" << r["min_margin"].get<double>();
      os << '\n';
    }
    emit(cfg, os.str());
  } else {
    json j = {{"config", cfg.echo()}, {"pass", pass}, {"results", results}};
    j["min_margin"] = std::isfinite(min_margin) ? json(min_margin) : json(nullptr);
    emit(cfg, j.dump(2) + "\n");
  }
  return pass ? kExitPass : kExitFail;
}

int cmd_thresholds(const RunConfig& cfg) {
  json rows = json::array();
  std::optional<double> p3, l11;
  const std::size_t count = dragon_condition_count();
  for (std::size_t i = 0; i < count; ++i) {
    dragon_condition_info info;
    check(dragon_condition_get(i, &info));
    json row = {{"id", info.id}, {"description", info.description},
                {"holds_q", {info.holds_q_lo, info.holds_q_hi}}};
    if (info.has_quoted_alpha) row["quoted_alpha_deg"] = info.quoted_alpha;
    if (info.has_quoted_q) row["quoted_q"] = info.quoted_q;
    if (info.has_bracket) {
      dragon_threshold t;
      check(dragon_find_threshold(info.id, info.bracket_lo, info.bracket_hi, cfg.threshold_tol,
                                  &t));
      row["critical_alpha_deg"] = t.critical_alpha_deg;
      row["critical_q"] = t.critical_q;
      row["bracket_width_deg"] = t.bracket_width;
      if (std::string(info.id) == "P3-main") p3 = t.critical_alpha_deg;
      if (std::string(info.id) == "L11") l11 = t.critical_alpha_deg;
    }
    rows.push_back(row);
  }

  json empirical = nullptr;
  if (!cfg.skip_empirical) {
    double lo = 0.0, hi = 0.0;
    check(dragon_empirical_critical_angle(cfg.empirical_level, 93.0, 97.0, cfg.empirical_tol, &lo,
                                          &hi));
    empirical = {{"level", cfg.empirical_level}, {"alpha_lo", lo}, {"alpha_hi", hi}};
  }

  if (cfg.format == "json") {
    json j = {{"config", cfg.echo()}, {"conditions", rows}, {"empirical", empirical}};
    emit(cfg, j.dump(2) + "\n");
    return kExitPass;
  }

  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-10s  %12s  %10s  %12s  %10s\n", "condition", "alpha(deg)",
                "q", "quoted alpha", "quoted q");
  os << buf;
  for (const json& r : rows) {
    const auto field = [&](const char* key, const char* fmt) {
      if (!r.contains(key)) return std::string("-");
      std::snprintf(buf, sizeof buf, fmt, r[key].get<double>());
      return std::string(buf);
    };
    const std::string a = field("critical_alpha_deg", "%.6f");
    const std::string q = field("critical_q", "%.7f");
    const std::string qa = field("quoted_alpha_deg", "%.3f");
    const std::string qq = field("quoted_q", "%.7g");
    std::snprintf(buf, sizeof buf, "%-10s  %12s  %10s  %12s  %10s\n",
                  r["id"].get<std::string>().c_str(), a.c_str(), q.c_str(), qa.c_str(),
                  qq.c_str());
    os << buf;
  }
  std::optional<double> crossing;
  if (!empirical.is_null()) {
    const double lo = empirical["alpha_lo"].get<double>();
    const double hi = empirical["alpha_hi"].get<double>();
    crossing = hi;
    std::snprintf(buf, sizeof buf, "empirical crossing at level %d: proper crossings up to %.4f, none from %.4f\n",
                  cfg.empirical_level, lo, hi);
    os << '\n' << buf;
  }
  const auto edge = [&](const std::optional<double>& v) {
    if (!v) return std::string("?");
    std::snprintf(buf, sizeof buf, "%.3f", *v);
    return std::string(buf);
  };
  os << "\nbands (alpha, degrees)\n";
  os << "  90.000 .. " << edge(crossing) << "  crossings found at level " << cfg.empirical_level
     << '\n';
  os << "  " << edge(crossing) << " .. " << edge(l11) << "  interval of uncertainty\n";
  os << "  " << edge(l11) << " .. " << edge(p3)
     << "  gap inequality holds; freedom from crossings conjectured, not proven\n";
  os << "  " << edge(p3) << " .. 108.000  hull argument rules out crossings\n";
  emit(cfg, os.str());
  return kExitPass;
}

int cmd_table_lemma11(const RunConfig& cfg) {
  std::vector<dragon_lemma11_row> rows(cfg.alphas.empty() ? 11 : cfg.alphas.size());
  check(dragon_lemma11_table(cfg.alphas.empty() ? nullptr : cfg.alphas.data(), rows.size(),
                             rows.data()));
  if (cfg.format == "json") {
    json j = {{"config", cfg.echo()}, {"rows", json::array()}};
    for (const dragon_lemma11_row& r : rows) {
      j["rows"].push_back({{"alpha_deg", r.alpha_deg}, {"beta_deg", r.beta_deg}, {"q", r.q},
                           {"lhs", r.lhs}, {"rhs", r.rhs}, {"satisfied", r.satisfied != 0}});
    }
    emit(cfg, j.dump(2) + "\n");
    return kExitPass;
  }
  std::string text = "alpha(deg)\tbeta(deg)\tq\tleft side\tright side\t<\n";
  char buf[160];
  for (const dragon_lemma11_row& r : rows) {
    std::snprintf(buf, sizeof buf, "%.3f\t%.3f\t%.7f\t%.7f\t%.7f\t%s\n", half_up3(r.alpha_deg), half_up3(r.beta_deg),
                  r.q, r.lhs, r.rhs, r.satisfied ? "TRUE" : "FALSE");
    text += buf;
  }
  emit(cfg, text);
  return kExitPass;
}

void add_alpha_level(CLI::App* sub, RunConfig& cfg, bool level_required = true) {
  sub->add_option("-a,--alpha", cfg.alpha, "Unfolding angle in degrees, 0 < alpha < 180")
      ->required()
      ->check(CLI::Range(0.0, 180.0));
  auto* lvl = sub->add_option("-n,--level", cfg.level, "Iteration level n (0..24)")
                  ->check(CLI::Range(0, 24));
  if (level_required) lvl->required();
  sub->add_option("-o,--out", cfg.out, "Output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Paperfolding polygon generator and verifier"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dragon_version()));
  RunConfig cfg;

  auto* gen = app.add_subcommand("generate", "Write the vertices of Q_n");
  add_alpha_level(gen, cfg);
  gen->add_option("--method", cfg.method, "recursive or inflation")
      ->check(CLI::IsMember({"recursive", "inflation"}));
  gen->add_option("-f,--format", cfg.format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->default_str("tsv");

  auto* render = app.add_subcommand("render", "Draw Q_n as SVG");
  add_alpha_level(render, cfg);
  render->add_flag("--hull", cfg.hull, "Overlay the hull outline");
  render->add_flag("--split", cfg.split, "Overlay the pi0 and pi1 images of the hull");
  render->add_flag("--contacts", cfg.contacts, "Mark contact events");
  render->add_option("--samples-per-turn", cfg.render_samples_per_turn, "Hull outline density")
      ->check(CLI::Range(8, 1 << 20))
      ->capture_default_str();
  render->add_option("--min-radius", cfg.render_min_radius,
                     "Stop spiral windings below this radius")
      ->capture_default_str();
  render->add_option("--contact-tol", cfg.contact_tol, "Contact tolerance in units of q^n")
      ->check(CLI::NonNegativeNumber);
  render->add_option("--threads", cfg.threads, "Worker threads (0 = all)");

  auto* verify = app.add_subcommand("verify", "Run verification suites; exit 0 pass, 2 fail");
  add_alpha_level(verify, cfg, false);
  verify->get_option("--level")->description("Level for containment and theorem1 (default 12)");
  verify->add_option("-s,--suite", cfg.suite, "hull-invariance, containment, separation, theorem1 or all")
      ->check(CLI::IsMember({"hull-invariance", "containment", "separation", "theorem1", "all"}))
      ->default_str("all");
  verify->add_option("--tol", cfg.tol, "Margin tolerance (hull-scale units)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--samples-per-turn", cfg.samples_per_turn, "Outline density")
      ->check(CLI::Range(8, 1 << 20));
  verify->add_option("--min-radius", cfg.min_radius, "Stop spiral windings below this radius");
  verify->add_option("--samples-per-segment", cfg.samples_per_segment,
                     "Points per segment for containment, endpoints included")
      ->check(CLI::Range(2, 1000));
  verify->add_option("--exclusion", cfg.exclusion,
                     "Radius around P11 skipped by separation, in units of q");
  verify->add_option("-f,--format", cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->default_str("json");

  auto* thr = app.add_subcommand("thresholds", "Recover critical angles of every condition");
  thr->add_option("--tol", cfg.threshold_tol, "Bisection tolerance in degrees")
      ->check(CLI::PositiveNumber);
  thr->add_option("--empirical-level", cfg.empirical_level, "Level for the crossing search")
      ->check(CLI::Range(1, 20));
  thr->add_option("--empirical-tol", cfg.empirical_tol, "Crossing search tolerance in degrees")
      ->check(CLI::PositiveNumber);
  thr->add_flag("--no-empirical", cfg.skip_empirical, "Skip the crossing search");
  thr->add_option("-f,--format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_str("text");
  thr->add_option("-o,--out", cfg.out, "Output file (default stdout)");

  auto* tab = app.add_subcommand("table-lemma11", "Tabulate the gap inequality near 96.24");
  tab->add_option("--alphas", cfg.alphas, "Angles to tabulate (default 96.235..96.245)")
      ->check(CLI::Range(0.0, 180.0));
  tab->add_option("-f,--format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "tsv", "json"}))
      ->default_str("text");
  tab->add_option("-o,--out", cfg.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      cfg.command = "generate";
      if (cfg.format.empty()) cfg.format = "tsv";
      return cmd_generate(cfg);
    }
    if (*render) {
      cfg.command = "render";
      cfg.format = "svg";
      return cmd_render(cfg);
    }
    if (*verify) {
      cfg.command = "verify";
      if (verify->count("--level") == 0) cfg.level = 12;
      if (cfg.format.empty()) cfg.format = "json";
      return cmd_verify(cfg);
    }
    if (*thr) {
      cfg.command = "thresholds";
      if (cfg.format.empty()) cfg.format = "text";
      return cmd_thresholds(cfg);
    }
    cfg.command = "table-lemma11";
    if (cfg.format.empty()) cfg.format = "text";
    return cmd_table_lemma11(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
