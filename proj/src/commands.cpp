#include "lawforge/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "lawforge/bench.hpp"
#include "lawforge/parser.hpp"
#include "lawforge/report.hpp"

namespace lawforge {

namespace {

bool read_file(const std::string& path, std::string& text, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read '" << path << "'\n";
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

// Built-ins only when no file is given.
std::optional<Schema> load_schema(const std::optional<std::string>& file, std::ostream& err) {
  if (!file) return Schema::with_builtins();
  std::string text;
  if (!read_file(*file, text, err)) return std::nullopt;
  auto result = parse_schema(text);
  if (auto* e = std::get_if<ParseError>(&result)) {
    err << *file << ":" << e->to_string() << "\n";
    return std::nullopt;
  }
  return std::get<Schema>(std::move(result));
}

std::optional<std::vector<TypeExpr>> parse_args_list(const std::vector<std::string>& items,
                                                     const Schema& schema, std::ostream& err) {
  std::vector<TypeExpr> out;
  for (const auto& item : items) {
    auto r = parse_ground_type(item, schema);
    if (auto* e = std::get_if<ParseError>(&r)) {
      err << "error: bad type argument '" << item << "': " << e->message << "\n";
      return std::nullopt;
    }
    out.push_back(std::get<TypeExpr>(std::move(r)));
  }
  return out;
}

std::optional<std::vector<std::int64_t>> parse_int_range(const std::string& text,
                                                         std::ostream& err) {
  auto dots = text.find("..");
  try {
    if (dots != std::string::npos) {
      std::size_t used = 0;
      long long lo = std::stoll(text.substr(0, dots), &used);
      if (used != dots) throw std::invalid_argument(text);
      std::string hi_text = text.substr(dots + 2);
      long long hi = std::stoll(hi_text, &used);
      if (used != hi_text.size()) throw std::invalid_argument(text);
      if (lo > hi) {
        err << "error: empty int domain '" << text << "'\n";
        return std::nullopt;
      }
      std::vector<std::int64_t> out;
      for (long long i = lo; i <= hi; ++i) out.push_back(i);
      return out;
    }
  } catch (const std::exception&) {
  }
  err << "error: expected an inclusive range a..b, got '" << text << "'\n";
  return std::nullopt;
}

std::vector<TypeExpr> default_args(int count) {
  return std::vector<TypeExpr>(static_cast<std::size_t>(count), TypeExpr::prim(PrimType::Int));
}

}  // namespace

int cmd_parse(const std::string& file, std::ostream& out, std::ostream& err) {
  std::string text;
  if (!read_file(file, text, err)) return 2;
  auto result = parse_schema(text);
  if (auto* e = std::get_if<ParseError>(&result)) {
    err << file << ":" << e->to_string() << "\n";
    return 2;
  }
  const Schema& schema = std::get<Schema>(result);
  out << format_schema(schema, schema.builtin_count());
  return 0;
}

int cmd_rep(const RepOptions& opt, std::ostream& out, std::ostream& err) {
  auto schema = load_schema(opt.file, err);
  if (!schema) return 2;
  const DataDecl* decl = schema->find(opt.type);
  if (decl == nullptr) {
    err << "error: unknown type '" << opt.type << "'\n";
    return 2;
  }
  try {
    if (opt.rep1) {
      out << to_string(build_rep1(*decl)) << "\n";
      return 0;
    }
    std::vector<TypeExpr> args;
    if (opt.args.empty()) {
      args = default_args(decl->param_count);
    } else {
      auto parsed = parse_args_list(opt.args, *schema, err);
      if (!parsed) return 2;
      args = std::move(*parsed);
      if (static_cast<int>(args.size()) != decl->param_count) {
        err << "error: '" << opt.type << "' expects " << decl->param_count
            << " type argument(s)\n";
        return 2;
      }
    }
    out << to_string(build_rep(*decl, args)) << "\n";
    return 0;
  } catch (const UnsupportedOccurrenceError& e) {
    err << "unsupported: " << e.what() << "\n";
    return 1;
  } catch (const ParamCountError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

namespace {

struct ConceptSelection {
  std::vector<Concept> concepts;
  bool explicit_single = false;
};

std::optional<ConceptSelection> parse_concepts(const std::string& text, std::ostream& err) {
  ConceptSelection sel;
  if (text == "all") {
    sel.concepts = {Concept::Eq, Concept::Ord, Concept::Semigroup, Concept::Monoid,
                    Concept::Functor};
    return sel;
  }
  sel.explicit_single = true;
  if (text == "eq") sel.concepts = {Concept::Eq};
  else if (text == "ord") sel.concepts = {Concept::Ord};
  else if (text == "semigroup") sel.concepts = {Concept::Semigroup};
  else if (text == "monoid") sel.concepts = {Concept::Monoid};
  else if (text == "functor") sel.concepts = {Concept::Functor};
  else if (text == "iso") sel.concepts = {};
  else {
    err << "error: unknown concept '" << text << "'\n";
    return std::nullopt;
  }
  return sel;
}

}  // namespace

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  auto schema = load_schema(opt.file, err);
  if (!schema) return 2;

  DomainConfig cfg;
  cfg.depth = opt.depth;
  cfg.include_nan = opt.include_nan;
  cfg.max_cases = opt.max_cases;
  if (opt.int_domain) {
    auto dom = parse_int_range(*opt.int_domain, err);
    if (!dom) return 2;
    cfg.int_domain = std::move(*dom);
  }
  if (cfg.depth < 1 || cfg.max_cases < 1) {
    err << "error: depth and max-cases must be at least 1\n";
    return 2;
  }
  auto sel = parse_concepts(opt.concept_text, err);
  if (!sel) return 2;
  const int workers = std::max(1, opt.workers);

  std::vector<const DataDecl*> targets;
  if (opt.type) {
    const DataDecl* decl = schema->find(*opt.type);
    if (decl == nullptr) {
      err << "error: unknown type '" << *opt.type << "'\n";
      return 2;
    }
    targets.push_back(decl);
  } else {
    for (const auto& d : schema->decls()) targets.push_back(&d);
  }

  Registry reg = Registry::with_builtins();
  std::vector<LawReport> reports;
  try {
    for (const DataDecl* decl : targets) {
      std::vector<TypeExpr> full;
      std::vector<TypeExpr> prefix;
      bool have_prefix_only = false;
      if (opt.args.empty()) {
        full = default_args(decl->param_count);
        if (decl->param_count > 0) prefix = default_args(decl->param_count - 1);
      } else {
        auto parsed = parse_args_list(opt.args, *schema, err);
        if (!parsed) return 2;
        if (static_cast<int>(parsed->size()) == decl->param_count) {
          full = *parsed;
          prefix.assign(full.begin(), full.empty() ? full.end() : full.end() - 1);
        } else if (static_cast<int>(parsed->size()) == decl->param_count - 1 &&
                   sel->concepts == std::vector<Concept>{Concept::Functor}) {
          prefix = *parsed;
          have_prefix_only = true;
        } else {
          err << "error: '" << decl->name << "' expects " << decl->param_count
              << " type argument(s)\n";
          return 2;
        }
      }

      for (Concept c : sel->concepts) {
        if (c == Concept::Functor) {
          if (decl->param_count == 0) {
            if (sel->explicit_single) {
              err << "error: '" << decl->name << "' has no type parameter to map over\n";
              return 2;
            }
            continue;
          }
          try {
            auto rs = run_concept_suite(*schema, decl->name, prefix, c, cfg, reg, workers);
            for (auto& r : rs) reports.push_back(std::move(r));
          } catch (const UnsupportedOccurrenceError& e) {
            if (sel->explicit_single) {
              err << "unsupported: " << e.what() << "\n";
              return 1;
            }
            out << "note: skipping Functor for " << decl->name << ": " << e.what() << "\n";
          }
          continue;
        }
        auto rs = run_concept_suite(*schema, decl->name, full, c, cfg, reg, workers);
        for (auto& r : rs) reports.push_back(std::move(r));
      }
      if (!have_prefix_only) {
        auto iso = check_iso(*schema, decl->name, full, cfg, workers);
        for (auto& r : iso) reports.push_back(std::move(r));
      }
    }
  } catch (const MissingInstanceError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  for (const auto& r : reports) out << render_report_line(r) << "\n";
  out << render_summary(reports) << "\n";

  if (opt.json_path) {
    std::ofstream jf(*opt.json_path, std::ios::binary);
    if (!jf) {
      err << "error: cannot write '" << *opt.json_path << "'\n";
      return 2;
    }
    jf << document_to_json(cfg, reports).dump(2) << "\n";
  }

  for (const auto& r : reports) {
    if (r.outcome.status == CheckStatus::Fail) return 1;
  }
  return 0;
}

int cmd_cases(const std::string& law_text, int constructors, std::ostream& out,
              std::ostream& err) {
  auto law = law_from_name(law_text);
  if (!law) {
    err << "error: unknown law '" << law_text << "'\n";
    return 2;
  }
  if (constructors <= 0) {
    err << "error: constructor count must be positive\n";
    return 2;
  }
  out << proof_case_count(*law, constructors) << "\n";
  return 0;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  auto schema = load_schema(opt.file, err);
  if (!schema) return 2;
  Concept c;
  if (opt.concept_text == "ord") c = Concept::Ord;
  else if (opt.concept_text == "eq") c = Concept::Eq;
  else {
    err << "error: bench supports concepts 'eq' and 'ord'\n";
    return 2;
  }
  const DataDecl* decl = schema->find(opt.type);
  if (decl == nullptr) {
    err << "error: unknown type '" << opt.type << "'\n";
    return 2;
  }
  std::vector<TypeExpr> args;
  if (opt.args.empty()) {
    args = default_args(decl->param_count);
  } else {
    auto parsed = parse_args_list(opt.args, *schema, err);
    if (!parsed) return 2;
    args = std::move(*parsed);
    if (static_cast<int>(args.size()) != decl->param_count) {
      err << "error: '" << opt.type << "' expects " << decl->param_count
          << " type argument(s)\n";
      return 2;
    }
  }
  try {
    BenchResult result = run_bench(*schema, opt.type, args, c, opt.n, opt.seed);
    out << "pairs: " << result.pairs << "\n";
    out << "generic: " << static_cast<std::uint64_t>(result.generic_ops_per_sec)
        << " ops/sec\n";
    out << "direct: " << static_cast<std::uint64_t>(result.direct_ops_per_sec)
        << " ops/sec\n";
    std::uint64_t agreed = result.pairs - result.mismatches;
    out << "agreement: " << agreed << "/" << result.pairs << "\n";
    if (result.mismatches > 0) {
      err << "error: generic and direct comparators disagree on " << result.mismatches
          << " pair(s)\n";
      return 1;
    }
    return 0;
  } catch (const DeriveError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lawforge
