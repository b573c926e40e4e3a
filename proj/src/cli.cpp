// Copyright 2026 The paritycut Authors
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

#include "paritycut/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>

#include "paritycut/families.hpp"
#include "paritycut/io.hpp"
#include "paritycut/oracle.hpp"
#include "paritycut/recognition.hpp"
#include "paritycut/rna.hpp"

namespace paritycut {

namespace {

using nlohmann::json;

// Keys present in every JSON response.
json base_document(const std::string& command) {
  return json{{"command", command}, {"verdict", nullptr},     {"reason", nullptr},
              {"witness", nullptr}, {"sigma_minus", nullptr}, {"sigma_plus", nullptr},
              {"method", nullptr}};
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

std::vector<std::uint32_t> parse_label_list(const std::string& text) {
  std::vector<std::uint32_t> labels;
  std::size_t i = 0;
  while (i <= text.size()) {
    const auto comma = text.find(',', i);
    const auto piece = text.substr(i, comma == std::string::npos ? std::string::npos : comma - i);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw CLI::ValidationError("--labels", "expected comma-separated integers, got '" + text + "'");
    }
    labels.push_back(value);
    if (comma == std::string::npos) break;
    i = comma + 1;
  }
  return labels;
}

std::vector<Sign> parse_sign_pattern(const std::string& text) {
  std::vector<Sign> signs;
  for (char c : text) {
    if (c == '+') {
      signs.push_back(Sign::kPositive);
    } else if (c == '-') {
      signs.push_back(Sign::kNegative);
    } else if (c != ',' && c != ' ') {
      throw CLI::ValidationError("--sign-pattern", "only '+' and '-' are allowed");
    }
  }
  return signs;
}

std::size_t exact_limit_from(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PARITYCUT_EXACT_LIMIT"); env != nullptr && *env != '\0') {
    std::size_t value = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw CLI::ValidationError("PARITYCUT_EXACT_LIMIT", "not a non-negative integer: " + std::string(text));
    }
    return value;
  }
  return kDefaultExactLimit;
}

json to_json_labels(const ParityLabelling& f) {
  return json(std::vector<std::uint32_t>(f.labels().begin(), f.labels().end()));
}

json one_based(const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

std::string join_one_based(const std::vector<Vertex>& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i] + 1;
  return os.str();
}

std::string join_labels(const ParityLabelling& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f.labels()[i];
  return os.str();
}

struct Options {
  std::string format = "text";
  std::string file;
  std::optional<std::size_t> exact_limit;
  bool heuristic = false;
  std::uint64_t seed = 1;
  std::size_t iterations = HeuristicOptions{}.iterations;
  std::string strategy = "enumerate";
  std::string family;
  std::vector<std::size_t> params;
  std::string sign_pattern;
  std::string base_file;
  std::string labels;
};

class Commands {
 public:
  Commands(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err)
      : opt_(opt), in_(in), out_(out), err_(err) {}

  int check() {
    const auto s = load();
    const auto result = is_parity_signed(s);
    if (json_mode()) {
      auto doc = base_document("check");
      doc["verdict"] = result ? "yes" : "no";
      if (result.reason()) doc["reason"] = result.reason()->describe();
      if (result.witness()) doc["witness"] = to_json_labels(*result.witness());
      if (result.bipartition()) {
        doc["bipartition"] = {one_based(result.bipartition()->block(0)),
                              one_based(result.bipartition()->block(1))};
      }
      emit(doc);
    } else {
      out_ << result.describe() << '\n';
      if (result.witness()) out_ << "witness: " << join_labels(*result.witness()) << '\n';
    }
    return result ? kExitYes : kExitNo;
  }

  int rna() {
    const auto s = load();
    const Graph& g = s.graph();
    ExactOptions exact;
    exact.limit = exact_limit_from(opt_.exact_limit);
    exact.strategy = opt_.strategy == "bnb" ? ExactStrategy::kBranchAndBound : ExactStrategy::kEnumerate;

    bool use_heuristic = opt_.heuristic;
    if (!use_heuristic && g.order() > std::min(exact.limit, kMaxExactVertices)) {
      err_ << "note: " << g.order() << " vertices exceeds the exact limit of "
           << std::min(exact.limit, kMaxExactVertices) << "; using the heuristic\n";
      use_heuristic = true;
    }
    const CutReport report = use_heuristic
                                 ? rna_heuristic(g, HeuristicOptions{opt_.seed, opt_.iterations})
                                 : rna_exact(g, exact);
    const std::size_t minus = report.cut_size;
    const std::size_t plus = g.size() - minus;
    if (json_mode()) {
      auto doc = base_document("rna");
      doc["sigma_minus"] = minus;
      doc["sigma_plus"] = plus;
      doc["method"] = std::string(to_string(report.method));
      doc["optimal"] = report.optimal;
      doc["bipartition"] = {one_based(report.bipartition.block(0)),
                            one_based(report.bipartition.block(1))};
      emit(doc);
    } else {
      out_ << "sigma-=" << minus << " sigma+=" << plus << " method=" << to_string(report.method)
           << '\n';
      out_ << "block0: " << join_one_based(report.bipartition.block(0)) << '\n';
      out_ << "block1: " << join_one_based(report.bipartition.block(1)) << '\n';
    }
    return kExitYes;
  }

  int classify() {
    const auto s = load();
    const auto shapes = paritycut::classify(s);
    const auto result = is_parity_signed(s);
    if (json_mode()) {
      auto doc = base_document("classify");
      doc["verdict"] = result ? "yes" : "no";
      if (result.reason()) doc["reason"] = result.reason()->describe();
      if (result.witness()) doc["witness"] = to_json_labels(*result.witness());
      doc["shapes"] = json::array();
      for (const auto& sh : shapes) {
        doc["shapes"].push_back({{"shape", sh.shape}, {"verdict", sh.parity_signed ? "yes" : "no"}});
      }
      emit(doc);
    } else {
      if (shapes.empty()) out_ << "shape: none\n";
      for (const auto& sh : shapes) {
        out_ << "shape: " << sh.shape << " closed-form=" << (sh.parity_signed ? "yes" : "no") << '\n';
      }
      out_ << "general: " << result.describe() << '\n';
    }
    return result ? kExitYes : kExitNo;
  }

  int gen() {
    const auto s = generate(descriptor());
    const auto text = serialize_signed_edge_list(s);
    if (json_mode()) {
      auto doc = base_document("gen");
      doc["document"] = text;
      emit(doc);
    } else {
      out_ << text;
    }
    return kExitYes;
  }

  int complement() {
    const auto s = load();
    const ParityLabelling mu(parse_label_list(opt_.labels));
    const auto c = parity_complement(s, mu);
    const auto text = serialize_signed_edge_list(c);
    if (json_mode()) {
      auto doc = base_document("complement");
      doc["document"] = text;
      emit(doc);
    } else {
      out_ << text;
    }
    return kExitYes;
  }

  int oracle() {
    const auto s = load();
    const bool verdict = oracle::oracle_is_parity_signed(s);
    const std::size_t minus = oracle::oracle_rna(s.graph());
    const std::size_t plus = s.size() - minus;
    if (json_mode()) {
      auto doc = base_document("oracle");
      doc["verdict"] = verdict ? "yes" : "no";
      doc["sigma_minus"] = minus;
      doc["sigma_plus"] = plus;
      doc["method"] = "exact";
      emit(doc);
    } else {
      out_ << "verdict: " << (verdict ? "yes" : "no") << '\n';
      out_ << "sigma-=" << minus << " sigma+=" << plus << " method=exact\n";
    }
    return verdict ? kExitYes : kExitNo;
  }

  int export_dot_file() {
    const auto s = load();
    std::optional<ParityLabelling> labelling;
    if (!opt_.labels.empty()) labelling.emplace(parse_label_list(opt_.labels));
    const auto dot = export_dot(s, labelling);
    if (json_mode()) {
      auto doc = base_document("export-dot");
      doc["dot"] = dot;
      emit(doc);
    } else {
      out_ << dot;
    }
    return kExitYes;
  }

 private:
  bool json_mode() const { return opt_.format == "json"; }

  void emit(const json& doc) { out_ << doc.dump(2) << '\n'; }

  SignedGraph load() { return parse_signed_edge_list(read_input(opt_.file, in_)); }

  std::size_t param(std::size_t i) const {
    if (i >= opt_.params.size()) {
      throw CLI::ValidationError("PARAMS", opt_.family + " needs " + std::to_string(i + 1) +
                                               " parameter(s)");
    }
    return opt_.params[i];
  }

  void expect_params(std::size_t count) const {
    if (opt_.params.size() != count) {
      throw CLI::ValidationError("PARAMS", opt_.family + " takes " + std::to_string(count) +
                                               " parameter(s)");
    }
  }

  FamilyDescriptor descriptor() const {
    const auto& f = opt_.family;
    const auto signs = parse_sign_pattern(opt_.sign_pattern);
    if (!signs.empty() && f != "path" && f != "cycle" && f != "wheel") {
      throw CLI::ValidationError("--sign-pattern", "only path, cycle and wheel accept a sign pattern");
    }
    if (f == "path") return expect_params(1), family::Path{param(0), signs};
    if (f == "cycle") return expect_params(1), family::Cycle{param(0), signs};
    if (f == "wheel") return expect_params(1), family::Wheel{param(0), signs};
    if (f == "ladder") return expect_params(1), family::Ladder{param(0)};
    if (f == "star") return expect_params(2), family::Star{param(0), param(1)};
    if (f == "bistar-plus") return expect_params(2), family::BistarPlus{param(0), param(1)};
    if (f == "bistar-neg") return expect_params(2), family::BistarAllNeg{param(0), param(1)};
    if (f == "kmn-neg") return expect_params(2), family::CompleteBipartiteAllNeg{param(0), param(1)};
    if (f == "corona") {
      expect_params(1);
      if (opt_.base_file.empty()) throw CLI::ValidationError("--base", "corona needs --base FILE");
      auto base = std::make_shared<const SignedGraph>(
          parse_signed_edge_list(read_input(opt_.base_file, in_)));
      return family::Corona{std::move(base), param(0)};
    }
    throw CLI::ValidationError("FAMILY", "unknown family '" + f + "'");
  }

  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Options opt;
  CLI::App app{"Parity signed graph recognition and rna numbers", "paritycut"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "Decide whether FILE is a parity signed graph");
  check->add_option("FILE", opt.file, "Signed edge list ('-' for stdin)")->required();

  auto* rna = app.add_subcommand("rna", "rna and adhika numbers of FILE's underlying graph");
  rna->add_option("FILE", opt.file, "Signed edge list ('-' for stdin)")->required();
  rna->add_option("--exact-limit", opt.exact_limit, "Largest order solved exactly");
  rna->add_flag("--heuristic", opt.heuristic, "Use local search instead of the exact solver");
  rna->add_option("--seed", opt.seed, "Heuristic seed")->capture_default_str();
  rna->add_option("--iterations", opt.iterations, "Heuristic restarts")->capture_default_str();
  rna->add_option("--strategy", opt.strategy, "Exact strategy")
      ->check(CLI::IsMember({"enumerate", "bnb"}))
      ->capture_default_str();

  auto* classify = app.add_subcommand("classify", "Closed-form verdicts for recognised shapes");
  classify->add_option("FILE", opt.file, "Signed edge list ('-' for stdin)")->required();

  auto* gen = app.add_subcommand("gen", "Emit a family member as a signed edge list");
  gen->add_option("FAMILY", opt.family,
                  "path|cycle|star|bistar-plus|bistar-neg|wheel|kmn-neg|ladder|corona")
      ->required();
  gen->add_option("PARAMS", opt.params, "Family parameters");
  gen->add_option("--sign-pattern", opt.sign_pattern, "Edge signs for path/cycle/wheel, e.g. +-+");
  gen->add_option("--base", opt.base_file, "Base signed graph for corona");

  auto* complement = app.add_subcommand("complement", "Parity complement under a witness labelling");
  complement->add_option("FILE", opt.file, "Signed edge list ('-' for stdin)")->required();
  complement->add_option("--labels", opt.labels, "Labels of vertices 1..n, comma separated")->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force verdict and rna number (n <= 20)");
  oracle->add_option("FILE", opt.file, "Signed edge list ('-' for stdin)")->required();

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering, negative edges dashed");
  dot->add_option("FILE", opt.file, "Signed edge list ('-' for stdin)")->required();
  dot->add_option("--labels", opt.labels, "Name vertices by these labels");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  Commands commands(opt, in, out, err);
  try {
    if (check->parsed()) return commands.check();
    if (rna->parsed()) return commands.rna();
    if (classify->parsed()) return commands.classify();
    if (gen->parsed()) return commands.gen();
    if (complement->parsed()) return commands.complement();
    if (oracle->parsed()) return commands.oracle();
    if (dot->parsed()) return commands.export_dot_file();
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace paritycut
