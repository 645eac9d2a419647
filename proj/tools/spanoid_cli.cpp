// Command-line front end. Element indices are 1-based on input and output.
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "json.hpp"
#include "spanoid/catalog.hpp"
#include "spanoid/code.hpp"
#include "spanoid/error.hpp"
#include "spanoid/family.hpp"
#include "spanoid/graph.hpp"
#include "spanoid/io.hpp"
#include "spanoid/lcs.hpp"
#include "spanoid/lp.hpp"
#include "spanoid/product.hpp"
#include "spanoid/rank.hpp"
#include "spanoid/simplex.hpp"

using namespace spanoid;
using nlohmann::ordered_json;

namespace {

enum class Format { text, csv, json_lines };

struct Config {
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string output;
  Limits limits;
};

// Collects one command's output and renders it in the chosen format.
// Records are key/value rows; a document is a file-format body.
class Output {
 public:
  // bare fields print their value alone in text mode
  void field(const std::string& key, ordered_json value, bool bare = false) {
    if (rows_.empty()) rows_.emplace_back();
    rows_.back()[key] = std::move(value);
    if (bare) bare_.push_back(key);
  }
  void table(std::vector<std::string> columns) { columns_ = std::move(columns); }
  void row(ordered_json r) { rows_.push_back(std::move(r)); }
  void document(std::string text) { document_ = std::move(text); }

  std::string render(Format f) const {
    std::ostringstream out;
    if (document_) {
      if (f == Format::json_lines)
        out << ordered_json{{"text", *document_}}.dump() << '\n';
      else
        out << *document_;
      for (const auto& r : rows_) out << (f == Format::json_lines ? r.dump() + "\n" : text_lines(r));
      return out.str();
    }
    if (f == Format::json_lines) {
      for (const auto& r : rows_) out << r.dump() << '\n';
      return out.str();
    }
    if (!columns_.empty() || f == Format::csv) {
      std::vector<std::string> cols = columns_;
      if (cols.empty() && !rows_.empty())
        for (const auto& [k, v] : rows_.front().items()) cols.push_back(k);
      out << join(cols, ",") << '\n';
      for (const auto& r : rows_) {
        std::vector<std::string> cells;
        for (const auto& c : cols) cells.push_back(r.contains(c) ? scalar(r[c]) : "");
        out << join(cells, ",") << '\n';
      }
      return out.str();
    }
    for (const auto& r : rows_) out << text_lines(r);
    return out.str();
  }

 private:
  static std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
  }
  static std::string scalar(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::vector<std::string> parts;
      for (const auto& e : v) parts.push_back(scalar(e));
      return join(parts, " ");
    }
    return v.dump();
  }
  std::string text_lines(const ordered_json& r) const {
    std::string s;
    for (const auto& [k, v] : r.items()) {
      bool bare = std::find(bare_.begin(), bare_.end(), k) != bare_.end();
      s += (bare ? "" : k + " ") + scalar(v) + "\n";
    }
    return s;
  }

  std::vector<ordered_json> rows_;
  std::vector<std::string> columns_;
  std::vector<std::string> bare_;
  std::optional<std::string> document_;
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "csv") return Format::csv;
  if (s == "json-lines") return Format::json_lines;
  throw DomainError("unknown format '" + s + "' (text, csv, json-lines)");
}

// A path, or a catalog name: pentagon, xu, free:N, uniform:R:N.
Spanoid load_spanoid(const std::string& arg) {
  bool catalog = arg.find('/') == std::string::npos && arg.find('.') == std::string::npos;
  if (catalog) return named_spanoid(arg);
  return parse_spanoid(read_file(arg));
}

std::vector<std::uint32_t> one_based(const Subset& s) {
  std::vector<std::uint32_t> out;
  s.for_each([&](Element e) { out.push_back(e + 1); });
  return out;
}

Subset parse_set_arg(const std::string& text, std::size_t n) {
  Subset s(n);
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw DomainError("--set: '" + item + "' is not an element index");
    }
    if (pos != item.size() || v < 1 || v > n)
      throw DomainError("--set: element '" + item + "' is outside 1.." + std::to_string(n));
    s.set(static_cast<Element>(v - 1));
  }
  return s;
}

std::string rule_text(const Rule& r) { return describe(r); }

ordered_json words_json(const Word& w) {
  ordered_json a = ordered_json::array();
  for (Symbol x : w) a.push_back(x);
  return a;
}

void emit(const Config& cfg, const Output& out) {
  std::string text = out.render(parse_format(cfg.format));
  if (cfg.output.empty())
    std::cout << text;
  else
    write_file(cfg.output, text);
}

RankMethod parse_method(const std::string& m) {
  if (m == "auto") return RankMethod::automatic;
  if (m == "hitting-set") return RankMethod::hitting_set;
  if (m == "direct") return RankMethod::direct_search;
  throw DomainError("unknown rank method '" + m + "' (auto, hitting-set, direct)");
}

EntropyMode parse_mode(const std::string& m) {
  if (m == "elemental") return EntropyMode::elemental;
  if (m == "full") return EntropyMode::full;
  throw DomainError("unknown entropy mode '" + m + "' (full, elemental)");
}

std::string fixed(double v, int digits = 6) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

void add_dimension(Output& out, const Dimension& d) {
  out.field("dimension", d.exact ? to_string(*d.exact) : fixed(d.value));
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size()) throw DomainError(what + ": '" + text + "' is not a count");
  return v;
}

// Sampler for the graph process: fixed:N:K, pair:LCSFILE or subset:LCSFILE.
struct SamplerHandle {
  std::unique_ptr<LcsInstance> inst;
  std::unique_ptr<SpreadSampler> sampler;
};

SamplerHandle make_sampler(const std::string& text) {
  SamplerHandle h;
  auto colon = text.find(':');
  std::string kind = text.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "fixed") {
    auto c = rest.find(':');
    if (c == std::string::npos) throw DomainError("sampler 'fixed' needs fixed:N:K");
    h.sampler = std::make_unique<FixedSetsSampler>(parse_count(rest.substr(0, c), "sampler N"),
                                                   parse_count(rest.substr(c + 1), "sampler K"));
  } else if (kind == "empty") {
    h.sampler = std::make_unique<EmptySampler>(parse_count(rest, "sampler N"));
  } else if (kind == "complete") {
    h.sampler = std::make_unique<CompleteSampler>(parse_count(rest, "sampler N"));
  } else if (kind == "pair" || kind == "subset") {
    h.inst = std::make_unique<LcsInstance>(parse_lcs(read_file(rest)));
    if (auto bad = validate_lcs(*h.inst)) throw DomainError("invalid LCS instance: " + bad->message);
    if (kind == "pair")
      h.sampler = std::make_unique<PairSampler>(*h.inst);
    else
      h.sampler = std::make_unique<SubsetSampler>(*h.inst);
  } else {
    throw DomainError("unknown sampler '" + text + "' (fixed:N:K, empty:N, complete:N, pair:FILE, subset:FILE)");
  }
  return h;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanoids: closure, rank, LP bounds, consistent codes, products and LCS experiments"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--seed", cfg.seed, "Root seed for every randomized step")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json-lines"}))
      ->capture_default_str();
  app.add_option("-o,--output", cfg.output, "Write output to this file instead of stdout");
  auto& L = cfg.limits;
  app.add_option("--enumeration-cap", L.enumeration_cap, "Largest n whose 2^n subsets are enumerated")
      ->capture_default_str();
  app.add_option("--rank-nodes", L.rank_nodes, "Search node budget for exact rank")->capture_default_str();
  app.add_option("--entropy-full-cap", L.entropy_full_cap, "Largest n for the full entropy LP")->capture_default_str();
  app.add_option("--entropy-elemental-cap", L.entropy_elemental_cap, "Largest n for the elemental entropy LP")
      ->capture_default_str();
  app.add_option("--rule-cap", L.rule_cap, "Most stored rules per spanoid")->capture_default_str();
  app.add_option("--code-words", L.code_words, "Most candidate words s^n in max-search")->capture_default_str();
  app.add_option("--code-nodes", L.code_nodes, "Search node budget in max-search")->capture_default_str();
  app.add_option("--materialize-bits", L.materialize_bits, "Largest universe of a materialized union code")
      ->capture_default_str();

  std::function<int()> action;
  Output out;

  // span
  std::string sp_path, set_text;
  auto* span_cmd = app.add_subcommand("span", "Closure of a set (1-based, comma separated)");
  span_cmd->add_option("spanoid", sp_path, "Spanoid file or catalog name (pentagon, xu, free:N, uniform:R:N)")->required();
  span_cmd->add_option("--set", set_text, "Elements, e.g. 1,2")->required();
  span_cmd->callback([&] {
    action = [&] {
      Spanoid sp = load_spanoid(sp_path);
      out.field("span", one_based(sp.span(parse_set_arg(set_text, sp.size()))), true);
      return 0;
    };
  });

  // rank
  std::string method = "auto";
  auto* rank_cmd = app.add_subcommand("rank", "Exact rank with a witness, plus the log2|closed sets| bound");
  rank_cmd->add_option("spanoid", sp_path, "Spanoid file or catalog name")->required();
  rank_cmd->add_option("--method", method, "auto, hitting-set or direct")->capture_default_str();
  bool no_bound = false;
  rank_cmd->add_flag("--no-bound", no_bound, "Skip the closed-set count");
  rank_cmd->callback([&] {
    action = [&] {
      Spanoid sp = load_spanoid(sp_path);
      RankCertificate c = rank(sp, parse_method(method), cfg.limits);
      out.field("rank", c.rank);
      out.field("witness", one_based(c.witness));
      out.field("method", to_string(c.method));
      out.field("nodes", c.nodes);
      if (!no_bound && sp.size() <= cfg.limits.enumeration_cap) {
        LogBound b = rank_log_bound(sp, cfg.limits);
        out.field("closed_sets", b.closed);
        out.field("log2_closed", fixed(b.log2));
        out.field("bound_holds", b.admits(c.rank));
      }
      return 0;
    };
  });

  // closed-sets / open-sets
  auto* closed_cmd = app.add_subcommand("closed-sets", "All closed sets in family format");
  closed_cmd->add_option("spanoid", sp_path, "Spanoid file or catalog name")->required();
  closed_cmd->callback([&] {
    action = [&] {
      out.document(format_family(closed_sets(load_spanoid(sp_path), cfg.limits)));
      return 0;
    };
  });
  bool minimal = false, irreducible = false;
  auto* open_cmd = app.add_subcommand("open-sets", "Open sets in family format");
  open_cmd->add_option("spanoid", sp_path, "Spanoid file or catalog name")->required();
  auto* min_flag = open_cmd->add_flag("--minimal", minimal, "Only the minimal nonempty open sets");
  open_cmd->add_flag("--irreducible", irreducible, "Only the union-irreducible open sets")->excludes(min_flag);
  open_cmd->callback([&] {
    action = [&] {
      Spanoid sp = load_spanoid(sp_path);
      SetFamily f = minimal       ? minimal_open_sets(sp, cfg.limits)
                    : irreducible ? irreducible_open_sets(sp, cfg.limits)
                                  : open_sets(sp, cfg.limits);
      out.document(format_family(f));
      return 0;
    };
  });

  // represent
  bool union_flavor = false;
  auto* rep_cmd = app.add_subcommand("represent", "Set representation from the closed sets");
  rep_cmd->add_option("spanoid", sp_path, "Spanoid file or catalog name")->required();
  rep_cmd->add_flag("--union", union_flavor, "Complemented (union) representation");
  rep_cmd->callback([&] {
    action = [&] {
      Spanoid sp = load_spanoid(sp_path);
      SetRepresentation rep = set_representation(sp, cfg.limits);
      out.field("universe", rep.universe);
      if (!union_flavor) out.field("intersection_dimension", intersection_dimension(rep));
      if (union_flavor) rep = rep.complemented();
      out.field("flavor", union_flavor ? "union" : "intersection");
      for (std::size_t i = 0; i < rep.sets.size(); ++i) out.field("set_" + std::to_string(i + 1), one_based(rep.sets[i]));
      return 0;
    };
  });

  // lp
  auto* lp_cmd = app.add_subcommand("lp", "Exact LP relaxations");
  lp_cmd->require_subcommand(1);
  bool dump_lp = false, with_dual = false;
  std::string mode = "elemental";
  auto* cover_cmd = lp_cmd->add_subcommand("cover", "Fractional cover of the minimal open sets");
  cover_cmd->add_option("spanoid", sp_path, "Spanoid file or catalog name")->required();
  cover_cmd->add_flag("--dual", with_dual, "Also print the dual weights per minimal open set");
  cover_cmd->add_flag("--dump", dump_lp, "Print the LP rows instead of solving");
  cover_cmd->callback([&] {
    action = [&] {
      Spanoid sp = load_spanoid(sp_path);
      if (dump_lp) {
        out.document(dump(cover_program(sp, cfg.limits)));
        return 0;
      }
      if (!with_dual) {
        out.field("lp_cover", to_string(lp_cover(sp, cfg.limits)), true);
        return 0;
      }
      CoverDual d = lp_cover_dual(sp, cfg.limits);
      out.field("lp_cover", to_string(d.optimum), true);
      for (std::size_t k = 0; k < d.opens.size(); ++k) {
        std::vector<std::uint32_t> o = one_based(d.opens[k]);
        std::string key = "lambda";
        for (auto e : o) key += "_" + std::to_string(e);
        out.field(key, to_string(d.lambda[k]));
      }
      return 0;
    };
  });
  auto* entropy_cmd = lp_cmd->add_subcommand("entropy", "Polymatroid bound with the span constraints");
  entropy_cmd->add_option("spanoid", sp_path, "Spanoid file or catalog name")->required();
  entropy_cmd->add_option("--mode", mode, "full or elemental Shannon inequalities")->capture_default_str();
  entropy_cmd->add_flag("--dump", dump_lp, "Print the LP rows instead of solving");
  entropy_cmd->callback([&] {
    action = [&] {
      Spanoid sp = load_spanoid(sp_path);
      if (dump_lp) {
        out.document(dump(entropy_program(sp, parse_mode(mode), cfg.limits)));
        return 0;
      }
      out.field("lp_entropy", to_string(lp_entropy(sp, parse_mode(mode), cfg.limits).optimum), true);
      return 0;
    };
  });

  // code
  auto* code_cmd = app.add_subcommand("code", "Consistent codes");
  code_cmd->require_subcommand(1);
  std::string code_path;
  bool emit_code = false;
  auto* check_cmd = code_cmd->add_subcommand("check", "Check a code against every stored rule (exit 1 on a violation)");
  check_cmd->add_option("spanoid", sp_path, "Spanoid file or catalog name")->required();
  check_cmd->add_option("code", code_path, "Code file")->required();
  check_cmd->callback([&] {
    action = [&] {
      Spanoid sp = load_spanoid(sp_path);
      Code c = parse_code(read_file(code_path));
      if (c.length() != sp.size())
        throw DomainError("code length " + std::to_string(c.length()) + " differs from n = " + std::to_string(sp.size()));
      out.field("words", c.size());
      add_dimension(out, code_dimension(c));
      auto v = check_consistent(sp, c);
      out.field("consistent", !v.has_value());
      if (!v) return 0;
      out.field("rule", rule_text(v->rule));
      out.field("first", words_json(v->first));
      out.field("second", words_json(v->second));
      return 1;
    };
  });
  auto* build_cmd = code_cmd->add_subcommand("build-cover", "Union code from the optimal cover dual");
  build_cmd->add_option("spanoid", sp_path, "Spanoid file or catalog name")->required();
  build_cmd->add_flag("--code", emit_code, "Print the materialized code instead of a summary");
  build_cmd->callback([&] {
    action = [&] {
      Spanoid sp = load_spanoid(sp_path);
      UnionCode c = build_cover_code(sp, cfg.limits);
      if (emit_code) {
        out.document(format_code(c.materialize(cfg.limits)));
        return 0;
      }
      out.field("dimension", to_string(c.dimension()));
      out.field("bits", c.bits());
      out.field("ell", c.ell());
      auto bad = c.first_violation(sp);
      out.field("consistent", !bad.has_value());
      return bad ? 1 : 0;
    };
  });
  std::size_t retries = 100;
  auto* small_cmd = code_cmd->add_subcommand("sample-small", "Sampled union code over a small alphabet");
  small_cmd->add_option("spanoid", sp_path, "Spanoid file or catalog name")->required();
  small_cmd->add_option("--retries", retries, "Sampling attempts")->capture_default_str();
  small_cmd->add_flag("--code", emit_code, "Print the materialized code instead of a summary");
  small_cmd->callback([&] {
    action = [&] {
      Spanoid sp = load_spanoid(sp_path);
      SampledCode s = sample_small_alphabet_code(sp, split_seed(cfg.seed, 0), retries, cfg.limits);
      if (emit_code) {
        out.document(format_code(s.code.materialize(cfg.limits)));
        return 0;
      }
      out.field("members", s.members);
      out.field("max_load", s.max_load);
      out.field("ell", s.code.ell());
      out.field("dimension", to_string(s.code.dimension()));
      out.field("attempts", s.attempts);
      return 0;
    };
  });
  std::uint64_t alphabet = 2;
  bool no_entropy = false;
  auto* max_cmd = code_cmd->add_subcommand("max-search", "Largest consistent code over alphabet s");
  max_cmd->add_option("spanoid", sp_path, "Spanoid file or catalog name")->required();
  max_cmd->add_option("-s,--alphabet", alphabet, "Alphabet size")->capture_default_str();
  max_cmd->add_flag("--no-entropy-bound", no_entropy, "Do not stop at floor(s^LPentropy)");
  max_cmd->add_flag("--code", emit_code, "Print the code instead of a summary");
  max_cmd->callback([&] {
    action = [&] {
      Spanoid sp = load_spanoid(sp_path);
      MaxCodeResult r = max_consistent_code(sp, alphabet, !no_entropy, cfg.limits);
      if (emit_code) {
        out.document(format_code(r.code));
        return 0;
      }
      out.field("words", r.code.size());
      add_dimension(out, code_dimension(r.code));
      out.field("upper_bound", r.upper_bound);
      out.field("nodes", r.nodes);
      return 0;
    };
  });

  // product
  std::string kind = "tensor", left_path, right_path;
  auto* prod_cmd = app.add_subcommand("product", "Product of two spanoids; element (i,j) is (i-1)*n2+j");
  prod_cmd->add_option("--kind", kind, "dot, tensor or semidirect")->required();
  prod_cmd->add_option("left", left_path, "Left factor")->required();
  prod_cmd->add_option("right", right_path, "Right factor")->required();
  prod_cmd->callback([&] {
    action = [&] {
      ProductSpanoid p = product(parse_product_kind(kind), load_spanoid(left_path), load_spanoid(right_path), cfg.limits);
      out.document(format_spanoid(p.spanoid));
      return 0;
    };
  });

  // frankl
  std::string family_path;
  auto* frankl_cmd = app.add_subcommand("frankl", "Most frequent element of a union-closed family against ceil(N/rank)");
  frankl_cmd->add_option("family", family_path, "Family file (union-closed, with the empty set)")->required();
  frankl_cmd->callback([&] {
    action = [&] {
      FranklResult f = frankl_max_frequency(parse_family(read_file(family_path)), cfg.limits);
      out.field("element", f.element + 1);
      out.field("count", f.count);
      out.field("members", f.members);
      out.field("rank", f.rank);
      out.field("meets_bound", f.meets_bound());
      return 0;
    };
  });

  // lcs
  auto* lcs_cmd = app.add_subcommand("lcs", "Locally correctable spanoids");
  lcs_cmd->require_subcommand(1);
  std::string lcs_path;
  auto* validate_cmd = lcs_cmd->add_subcommand("validate", "Check an LCS instance (exit 1 when invalid)");
  validate_cmd->add_option("instance", lcs_path, "LCS file")->required();
  validate_cmd->callback([&] {
    action = [&] {
      LcsInstance inst = parse_lcs(read_file(lcs_path));
      auto bad = validate_lcs(inst);
      out.field("valid", !bad.has_value());
      if (!bad) return 0;
      out.field("element", bad->element + 1);
      out.field("message", bad->message);
      return 1;
    };
  });
  std::size_t lcs_n = 30, lcs_q = 3, lcs_k = 3;
  auto* random_cmd = lcs_cmd->add_subcommand("random", "Random q-LCS instance in LCS format");
  random_cmd->add_option("-n", lcs_n, "Elements")->capture_default_str();
  random_cmd->add_option("-q", lcs_q, "Premise size")->capture_default_str();
  random_cmd->callback([&] {
    action = [&] {
      out.document(format_lcs(random_qlcs(lcs_n, lcs_q, split_seed(cfg.seed, 0), cfg.limits)));
      return 0;
    };
  });
  auto* had_cmd = lcs_cmd->add_subcommand("hadamard", "Hadamard 2-LCS on the nonzero k-bit vectors");
  had_cmd->add_option("-k", lcs_k, "Dimension")->capture_default_str();
  had_cmd->callback([&] {
    action = [&] {
      out.document(format_lcs(hadamard_spanoid(lcs_k, cfg.limits)));
      return 0;
    };
  });
  std::size_t runs = 1;
  ProcessOptions popts;
  std::size_t steps = 0, max_size = 0;
  auto* ss_cmd = lcs_cmd->add_subcommand("spanning-set", "Spanning sets from the graph process; CSV rows per run");
  ss_cmd->add_option("instance", lcs_path, "LCS file")->required();
  ss_cmd->add_option("--runs", runs, "Independent runs; run r uses split_seed(seed, r)")->capture_default_str();
  ss_cmd->add_option("--steps", steps, "Process steps (0 keeps the default)")->capture_default_str();
  ss_cmd->add_option("--retries", popts.retries, "Attempts per run")->capture_default_str();
  ss_cmd->add_option("--max-size", max_size, "Retry attempts whose set is larger (0 disables)")->capture_default_str();
  ss_cmd->add_flag("--best-prefix", popts.best_prefix, "Return the smallest candidate over all prefixes");
  ss_cmd->callback([&] {
    action = [&] {
      LcsInstance inst = parse_lcs(read_file(lcs_path));
      if (steps) popts.steps = steps;
      if (max_size) popts.max_size = max_size;
      out.table({"n", "q", "delta", "seed", "set_size", "verified"});
      for (std::size_t r = 0; r < runs; ++r) {
        std::uint64_t s = split_seed(cfg.seed, r);
        SpanningRun run = inst.q == 2 ? spanning_set_2lcs(inst, s, popts) : spanning_set_qlcs(inst, s, popts);
        out.row(ordered_json{{"n", inst.spanoid.size()},
                             {"q", inst.q},
                             {"delta", to_string(inst.delta)},
                             {"seed", s},
                             {"set_size", run.set.count()},
                             {"verified", inst.spanoid.spans_all(run.set)}});
      }
      return 0;
    };
  });
  std::string sampler_name = "fixed:50:10";
  auto* gp_cmd = lcs_cmd->add_subcommand("graph-process", "Source counts of G_t; CSV step,sources");
  gp_cmd->add_option("--sampler", sampler_name, "fixed:N:K, empty:N, complete:N, pair:FILE or subset:FILE")
      ->capture_default_str();
  gp_cmd->add_option("--steps", steps, "Steps (0 means ceil((4/alpha) ln n))")->capture_default_str();
  gp_cmd->callback([&] {
    action = [&] {
      SamplerHandle h = make_sampler(sampler_name);
      std::size_t t = steps;
      if (t == 0) {
        double alpha = to_double(h.sampler->alpha());
        if (alpha <= 0) throw DomainError("sampler has alpha = 0; pass --steps");
        t = static_cast<std::size_t>(std::ceil(4 / alpha * std::log(double(h.sampler->vertices()))));
      }
      auto counts = graph_process_run(*h.sampler, t, split_seed(cfg.seed, 0));
      out.table({"step", "sources"});
      for (std::size_t i = 0; i < counts.size(); ++i) out.row(ordered_json{{"step", i}, {"sources", counts[i]}});
      return 0;
    };
  });

  // paper repro
  auto* paper_cmd = app.add_subcommand("paper", "Reproduction of the published numbers");
  paper_cmd->require_subcommand(1);
  bool verbose = false;
  auto* repro_cmd = paper_cmd->add_subcommand("repro", "Run every acceptance criterion; pass/fail table");
  repro_cmd->add_flag("-v,--verbose", verbose, "List every check");
  repro_cmd->callback([&] {
    action = [&] {
      auto results = acceptance::run_all(cfg.seed);
      std::ostringstream table;
      acceptance::print_table(table, results, verbose);
      out.document(table.str());
      for (const auto& r : results)
        if (!r.passed()) return 1;
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    parse_format(cfg.format);
    int status = action();
    emit(cfg, out);
    return status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e);
  }
}
