// Command-line surface for the C2 crystal library: generation, inspection,
// operator application, exhaustive relation verification, and auditing of
// externally produced graphs.
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <c2crystal/c2crystal.hpp>

namespace {

using namespace c2crystal;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::optional<Shape> parse_shape(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return std::nullopt;
  try {
    std::size_t used = 0;
    const int l1 = std::stoi(text.substr(0, comma), &used);
    if (used != comma) return std::nullopt;
    const std::string rest = text.substr(comma + 1);
    const int l2 = std::stoi(rest, &used);
    if (used != rest.size()) return std::nullopt;
    const Shape s{l1, l2};
    if (!s.valid()) return std::nullopt;
    return s;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return kExitOk;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return kExitUsage;
  }
  os << payload;
  return kExitOk;
}

std::string degree_summary(const DegreeCounts& c) {
  std::ostringstream os;
  os << "deg2=" << c.of(2) << " deg4=" << c.of(4) << " deg5=" << c.of(5)
     << " deg7=" << c.of(7);
  return os.str();
}

int run_generate(const std::string& shape_text, const std::string& format,
                 const std::string& out_path) {
  const auto shape = parse_shape(shape_text);
  if (!shape) {
    std::cerr << "error: --shape must be 'L1,L2' with L1 >= L2 >= 0\n";
    return kExitUsage;
  }
  const CrystalGraph g = generate(*shape);
  if (format == "dot") return write_output(out_path, export_dot(g));
  if (format == "json") return write_output(out_path, export_json(g));
  std::cerr << "error: generate supports --format dot|json\n";
  return kExitUsage;
}

int run_stats(const std::string& tableau_text, const std::string& format,
              const std::string& out_path) {
  Tableau t;
  try {
    t = parse_tableau(tableau_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const auto violations = validate(t);
  if (!violations.empty()) {
    std::cerr << "error: not a valid tableau:\n";
    for (const auto& v : violations) std::cerr << "  - " << v.message() << "\n";
    return kExitUsage;
  }

  const AbcdStats s = abcd(t);
  const bool applicable = epsilon(t, Color::One) > 0 && epsilon(t, Color::Two) > 0;

  if (format == "json") {
    nlohmann::ordered_json j;
    j["tableau"] = render_tableau(t);
    j["shape"] = {t.shape().lambda1, t.shape().lambda2};
    j["stats"] = {{"A", s.a}, {"B", s.b}, {"C", s.c}, {"D", s.d}};
    for (Color c : kColors) {
      const std::string key = "color" + std::to_string(color_value(c));
      const auto sig = signature(t, c);
      const auto red = reduce(sig);
      const auto layout = block_layout(t, c);
      j["signatures"][key] = {{"raw", sig_string(sig.syms)},
                              {"reduced", sig_string(red.syms)},
                              {"epsilon", red.plus_count()},
                              {"phi", red.minus_count()}};
      j["blocks"][key] = {{"left", {{"size", layout.left.size}, {"edge", layout.left.left_edge}}},
                          {"right", {{"size", layout.right.size}, {"edge", layout.right.left_edge}}}};
      if (red.plus_count() > 0)
        j["action_side"][key] = action_side_name(action_side(t, c));
    }
    if (applicable) j["relation_degree"] = classify_by_stats(s);
    return write_output(out_path, j.dump(2) + "\n");
  }

  std::ostringstream os;
  os << "tableau: " << render_tableau(t) << "\n";
  os << "shape: " << t.shape().lambda1 << "," << t.shape().lambda2 << "\n";
  os << "A=" << s.a << " B=" << s.b << " C=" << s.c << " D=" << s.d << "\n";
  for (Color c : kColors) {
    const int cv = color_value(c);
    const auto sig = signature(t, c);
    const auto red = reduce(sig);
    const auto layout = block_layout(t, c);
    os << "signature " << cv << ":        " << sig_string(sig.syms) << "\n";
    os << "reduced " << cv << ":          " << sig_string(red.syms) << "\n";
    os << "epsilon" << cv << "=" << red.plus_count() << " phi" << cv << "=" << red.minus_count()
       << "\n";
    os << "blocks " << cv << ": left size=" << layout.left.size
       << " edge=" << layout.left.left_edge << ", right size=" << layout.right.size
       << " edge=" << layout.right.left_edge << " (word length " << layout.word_length << ")\n";
    if (red.plus_count() > 0)
      os << "action side " << cv << ": " << action_side_name(action_side(t, c)) << "\n";
  }
  if (applicable)
    os << "relation degree: " << classify_by_stats(s) << "\n";
  else
    os << "relation degree: n/a (needs both raising operators defined)\n";
  return write_output(out_path, os.str());
}

int run_apply(const std::string& tableau_text, const std::string& ops_text, bool trace,
              const std::string& out_path) {
  Tableau t;
  try {
    t = parse_tableau(tableau_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!is_valid(t)) {
    std::cerr << "error: not a valid tableau\n";
    return kExitUsage;
  }

  std::vector<std::pair<bool, Color>> ops;  // (is_raising, color)
  std::stringstream ss(ops_text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok != "e1" && tok != "e2" && tok != "f1" && tok != "f2") {
      std::cerr << "error: --ops must be a comma list of e1,e2,f1,f2\n";
      return kExitUsage;
    }
    ops.emplace_back(tok[0] == 'e', tok[1] == '1' ? Color::One : Color::Two);
  }
  if (ops.empty()) {
    std::cerr << "error: --ops must name at least one operator\n";
    return kExitUsage;
  }

  std::ostringstream os;
  std::optional<Tableau> cur = t;
  for (const auto& [raising, color] : ops) {
    const std::string name =
        std::string(raising ? "e" : "f") + std::to_string(color_value(color));
    cur = raising ? apply_e(*cur, color) : apply_f(*cur, color);
    if (trace) os << name << ": " << (cur ? render_tableau(*cur) : "0") << "\n";
    if (!cur) break;
  }
  if (!trace) os << (cur ? render_tableau(*cur) : "0") << "\n";
  return write_output(out_path, os.str());
}

int run_verify(const std::string& shape_text, int max_l1, int deep_sample,
               std::uint64_t seed, const std::string& format, const std::string& out_path) {
  std::vector<Shape> shapes;
  if (!shape_text.empty()) {
    const auto shape = parse_shape(shape_text);
    if (!shape) {
      std::cerr << "error: --shape must be 'L1,L2' with L1 >= L2 >= 0\n";
      return kExitUsage;
    }
    shapes.push_back(*shape);
  } else if (max_l1 >= 0) {
    for (int l1 = 0; l1 <= max_l1; ++l1)
      for (int l2 = 0; l2 <= l1; ++l2) shapes.push_back({l1, l2});
  } else {
    std::cerr << "error: verify needs --shape L1,L2 or --max-l1 N\n";
    return kExitUsage;
  }

  std::mt19937_64 rng(seed);
  bool all_passed = true;
  std::ostringstream os;
  nlohmann::ordered_json jout = nlohmann::ordered_json::array();

  for (const Shape s : shapes) {
    const CrystalGraph g = generate(s);
    const CrystalReport report = verify_crystal(g);
    all_passed = all_passed && report.passed();

    int deep_checked = 0;
    if (deep_sample > 0) {
      std::vector<const Tableau*> applicable;
      for (const Tableau& t : g.vertices)
        if (epsilon(t, Color::One) > 0 && epsilon(t, Color::Two) > 0) applicable.push_back(&t);
      std::shuffle(applicable.begin(), applicable.end(), rng);
      for (std::size_t i = 0; i < applicable.size() && i < static_cast<std::size_t>(deep_sample);
           ++i) {
        const auto at7 = detect_relation(*applicable[i], kMaxRelationDegree);
        const auto at8 = detect_relation(*applicable[i], kMaxRelationDegree + 1);
        ++deep_checked;
        if (!at7 || !at8 || at7->degree != at8->degree) {
          all_passed = false;
          os << "shape " << s.lambda1 << "," << s.lambda2
             << ": deeper search disagrees on " << render_tableau(*applicable[i]) << "\n";
        }
      }
    }

    if (format == "json") {
      nlohmann::ordered_json rec;
      rec["shape"] = {s.lambda1, s.lambda2};
      rec["vertices"] = report.vertex_count;
      rec["applicable"] = report.applicable_e;
      rec["degrees"] = {{"2", report.e_counts.of(2)},
                        {"4", report.e_counts.of(4)},
                        {"5", report.e_counts.of(5)},
                        {"7", report.e_counts.of(7)}};
      rec["lowering_side_matches"] = report.e_counts == report.f_counts;
      rec["passed"] = report.passed();
      rec["failures"] = report.failures;
      if (deep_sample > 0) rec["deep_checked"] = deep_checked;
      jout.push_back(std::move(rec));
    } else {
      os << "shape " << s.lambda1 << "," << s.lambda2 << ": vertices=" << report.vertex_count
         << " applicable=" << report.applicable_e << " " << degree_summary(report.e_counts)
         << " f-side=" << (report.e_counts == report.f_counts ? "match" : "MISMATCH") << " "
         << (report.passed() ? "PASS" : "FAIL") << "\n";
      for (const auto& f : report.failures) os << "  ! " << f << "\n";
    }
  }

  int rc = all_passed ? kExitOk : kExitVerificationFailure;
  if (format == "json") {
    nlohmann::ordered_json wrapper;
    wrapper["shapes"] = std::move(jout);
    wrapper["passed"] = all_passed;
    const int wrc = write_output(out_path, wrapper.dump(2) + "\n");
    return wrc != kExitOk ? wrc : rc;
  }
  os << (all_passed ? "all shapes pass" : "verification FAILED") << "\n";
  const int wrc = write_output(out_path, os.str());
  return wrc != kExitOk ? wrc : rc;
}

int run_audit(const std::string& path, const std::string& format, const std::string& out_path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return kExitUsage;
  }
  std::stringstream buffer;
  buffer << is.rdbuf();

  AuditGraph g;
  try {
    g = load_audit_graph(buffer.str());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const AuditReport report = audit_graph(g);

  auto vertex_name = [&g](int v) {
    std::string name = std::to_string(v);
    if (!g.labels[static_cast<std::size_t>(v)].empty())
      name += " (" + g.labels[static_cast<std::size_t>(v)] + ")";
    return name;
  };

  if (format == "json") {
    nlohmann::ordered_json j;
    j["vertices"] = g.n;
    j["checked_raising"] = report.checked_raising;
    j["checked_lowering"] = report.checked_lowering;
    j["structural"] = report.structural;
    j["findings"] = nlohmann::ordered_json::array();
    for (const auto& f : report.findings)
      j["findings"].push_back({{"vertex", f.vertex}, {"reason", f.reason}});
    j["clean"] = report.clean();
    const int wrc = write_output(out_path, j.dump(2) + "\n");
    if (wrc != kExitOk) return wrc;
    return report.clean() ? kExitOk : kExitVerificationFailure;
  }

  std::ostringstream os;
  for (const auto& s : report.structural) os << "structural: " << s << "\n";
  for (const auto& f : report.findings)
    os << "vertex " << vertex_name(f.vertex) << ": " << f.reason << "\n";
  if (report.clean())
    os << "audit clean: " << report.checked_raising << " raising and "
       << report.checked_lowering << " lowering checks on " << g.n << " vertices\n";
  else
    os << "audit FAILED: not a doubly laced crystal\n";
  const int wrc = write_output(out_path, os.str());
  if (wrc != kExitOk) return wrc;
  return report.clean() ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Type C2 crystal graphs from two-row tableaux: generation, statistics, "
               "operator application, relation verification, and graph auditing"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 12345;
  app.add_option("--format", format, "output format: text, json, or dot (generate only)")
      ->capture_default_str();
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  app.add_option("--seed", seed, "seed for sampled deeper-bound checks in verify")
      ->capture_default_str();

  auto* gen = app.add_subcommand("generate", "generate the crystal of a shape");
  std::string gen_shape;
  gen->add_option("--shape", gen_shape, "shape as L1,L2")->required();

  auto* stats = app.add_subcommand("stats", "signatures, statistics and classification of a tableau");
  std::string stats_tableau;
  stats->add_option("--tableau", stats_tableau, "tableau text, e.g. '1 1 / 2'")->required();

  auto* apply = app.add_subcommand("apply", "apply raising/lowering operators to a tableau");
  std::string apply_tableau, apply_ops;
  bool apply_trace = false;
  apply->add_option("--tableau", apply_tableau, "tableau text")->required();
  apply->add_option("--ops", apply_ops, "comma list of operators, e.g. e1,f2,e2")->required();
  apply->add_flag("--trace", apply_trace, "print the tableau after each step");

  auto* verify = app.add_subcommand("verify", "exhaustively verify the local relation structure");
  std::string verify_shape;
  int verify_max_l1 = -1;
  int verify_deep = 0;
  verify->add_option("--shape", verify_shape, "single shape as L1,L2");
  verify->add_option("--max-l1", verify_max_l1, "verify all shapes with lambda1 <= N");
  verify->add_option("--deep-sample", verify_deep,
                     "per shape, re-run N sampled vertices with search bound 8");

  auto* audit = app.add_subcommand("audit", "audit a colored digraph JSON file");
  std::string audit_path;
  audit->add_option("file", audit_path, "graph JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (format != "text" && format != "json" && format != "dot") {
    std::cerr << "error: --format must be text, json or dot\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return run_generate(gen_shape, format == "text" ? "json" : format, out_path);
    if (stats->parsed()) return run_stats(stats_tableau, format, out_path);
    if (apply->parsed()) return run_apply(apply_tableau, apply_ops, apply_trace, out_path);
    if (verify->parsed())
      return run_verify(verify_shape, verify_max_l1, verify_deep, seed, format, out_path);
    if (audit->parsed()) return run_audit(audit_path, format, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
