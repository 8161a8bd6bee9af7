#include "massform/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "massform/errors.hpp"
#include "massform/expr.hpp"
#include "massform/mass.hpp"
#include "massform/reference.hpp"

namespace massform::cli {

namespace {

using nlohmann::json;

struct InvalidResidue : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json group_json(const PermGroup& g) {
  return json{{"expr", g.label()}, {"order", g.order()}, {"degree", g.degree()}};
}

json poly_json(const MassPoly& p) { return json(p.coeffs()); }

// Residue selector: "all" or a positive integer.
std::vector<long long> select_residues(const std::string& text, long long modulus) {
  if (text == "all") return invertible_residues(modulus);
  try {
    std::size_t used = 0;
    const long long a = std::stoll(text, &used);
    if (used != text.size() || a < 1) throw InvalidResidue("residue must be >= 1");
    return {a};
  } catch (const InvalidResidue&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidResidue("residue must be a positive integer or 'all'");
  }
}

struct Stratum {
  std::string key;
  MassPoly mass;
};

struct ResidueResult {
  long long residue = 1;
  MassPoly total;
  std::optional<std::vector<Stratum>> strata;
};

struct MassReport {
  std::string group_expr;
  long long group_order = 1;
  int group_degree = 1;
  std::string counting_name;
  long long modulus = 1;
  std::vector<ResidueResult> results;
  bool formula_exists = false;
  std::optional<MassPoly> polynomial;
  std::vector<std::string> notes;
};

void emit_json(const MassReport& report, std::ostream& out, std::ostream& err) {
  json j;
  j["group"] = json{{"expr", report.group_expr},
                    {"order", report.group_order},
                    {"degree", report.group_degree}};
  j["counting"] = report.counting_name;
  j["modulus"] = report.modulus;
  j["results"] = json::array();
  for (const auto& r : report.results) {
    json one{{"residue", r.residue}, {"total", poly_json(r.total)}};
    if (r.strata) {
      one["strata"] = json::array();
      for (const auto& s : *r.strata)
        one["strata"].push_back(json{{"key", s.key}, {"coeffs", poly_json(s.mass)}});
    }
    j["results"].push_back(std::move(one));
  }
  j["formula_exists"] = report.formula_exists;
  if (report.polynomial) j["polynomial"] = poly_json(*report.polynomial);
  else j["polynomial"] = nullptr;
  out << j.dump(2) << "\n";
  for (const auto& note : report.notes) err << "note: " << note << "\n";
}

void emit_text(const MassReport& report, std::ostream& out) {
  out << "group:    " << report.group_expr << "  (order " << report.group_order
      << ", degree " << report.group_degree << ")\n";
  out << "counting: " << report.counting_name << "\n";
  out << "modulus:  " << report.modulus << "\n";
  for (const auto& r : report.results) {
    out << "residue " << r.residue << ": " << r.total.str() << "\n";
    if (r.strata)
      for (const auto& s : *r.strata) out << "  " << s.key << ": " << s.mass.str() << "\n";
  }
  out << "formula exists: " << (report.formula_exists ? "yes" : "no") << "\n";
  out << "polynomial: " << (report.polynomial ? report.polynomial->str() : "none")
      << "\n";
  for (const auto& note : report.notes) out << "note: " << note << "\n";
}

void finalize_verdict(MassReport& report) {
  report.formula_exists = !report.results.empty();
  for (const auto& r : report.results)
    if (r.total != report.results.front().total) {
      report.formula_exists = false;
      break;
    }
  if (report.formula_exists) report.polynomial = report.results.front().total;
  report.notes.push_back(
      "Tame masses only: values apply to residue sizes q coprime to " +
      std::to_string(report.modulus) +
      "; wild residue characteristics are out of scope.");
}

int run_mass(const std::string& group_text, const std::string& counting_text,
             const std::string& residue_text, const std::string& by,
             const std::string& format, long long max_order, std::ostream& out,
             std::ostream& err) {
  const auto group_expr = parse_group(group_text);
  const auto counting_expr = parse_counting(counting_text);
  if (!check_compat(*group_expr, *counting_expr))
    throw StructureError("counting expression is incompatible with the group expression");
  if (by == "wreath-type" && group_expr->kind() != GroupExpr::Kind::Wr)
    throw StructureError("--by wreath-type requires a wr(...) group");
  if (by == "product-type" && group_expr->kind() != GroupExpr::Kind::Prod)
    throw StructureError("--by product-type requires an x(...) group");

  const PermGroup group = build_group(*group_expr, max_order);
  const TameCountingFunction counting = build_counting(*counting_expr, group);
  MassReport report;
  report.group_expr = group.label();
  report.group_order = group.order();
  report.group_degree = group.degree();
  report.counting_name = counting.name();
  report.modulus = group.order();

  for (long long a : select_residues(residue_text, report.modulus)) {
    ResidueResult r;
    r.residue = a;
    r.total = total_mass(group, counting, a);
    if (by == "type") {
      r.strata.emplace();
      for (const auto& [key, mass] : mass_by_type(group, counting, a))
        r.strata->push_back(Stratum{key.str(), mass});
    } else if (by == "wreath-type") {
      r.strata.emplace();
      for (const auto& [key, mass] : mass_by_wreath_type(group, counting, a))
        r.strata->push_back(Stratum{key.str(), mass});
    } else if (by == "product-type") {
      r.strata.emplace();
      for (const auto& [key, mass] : mass_by_product_type(group, counting, a))
        r.strata->push_back(Stratum{key.first.str() + " | " + key.second.str(), mass});
    } else if (by == "image") {
      r.strata.emplace();
      for (const auto& [key, mass] : mass_by_image(group, counting, a))
        r.strata->push_back(Stratum{image_class_label(group, key), mass});
    }
    report.results.push_back(std::move(r));
  }
  finalize_verdict(report);

  if (format == "text") emit_text(report, out);
  else emit_json(report, out, err);
  return 0;
}

int run_check(const std::string& group_text, const std::string& counting_text,
              const std::string& residue_text, const std::string& format,
              long long max_order, std::ostream& out, std::ostream& err) {
  const auto group_expr = parse_group(group_text);
  const auto counting_expr = parse_counting(counting_text);
  if (!check_compat(*group_expr, *counting_expr))
    throw StructureError("counting expression is incompatible with the group expression");

  const PermGroup group = build_group(*group_expr, max_order);
  const TameCountingFunction counting = build_counting(*counting_expr, group);
  MassReport report;
  report.group_expr = group.label();
  report.group_order = group.order();
  report.group_degree = group.degree();
  report.counting_name = counting.name();
  report.modulus = group.order();
  for (long long a : select_residues(residue_text, report.modulus))
    report.results.push_back(
        ResidueResult{a, total_mass(group, counting, a), std::nullopt});
  finalize_verdict(report);

  if (format == "text") emit_text(report, out);
  else emit_json(report, out, err);
  return 0;
}

int run_rational(const std::string& group_text, const std::string& format,
                 long long max_order, std::ostream& out) {
  const auto group_expr = parse_group(group_text);
  const PermGroup group = build_group(*group_expr, max_order);
  const bool verdict = rational_character_table(group);
  if (format == "text") {
    out << "group: " << group.label() << "  (order " << group.order() << ")\n";
    out << "rational character table: " << (verdict ? "yes" : "no") << "\n";
  } else {
    json j;
    j["group"] = group_json(group);
    j["rational_character_table"] = verdict;
    out << j.dump(2) << "\n";
  }
  return 0;
}

int run_reference_sn(int n, const std::string& format, std::ostream& out) {
  const MassPoly poly = bhargava_rhs(n);
  if (format == "text") {
    out << "S" << n << " mass polynomial (unscaled): " << poly.str() << "\n";
  } else {
    json j;
    j["n"] = n;
    j["coefficients"] = poly_json(poly);
    out << j.dump(2) << "\n";
  }
  return 0;
}

int run_ambient(const std::string& group_text, const std::string& target_text,
                const std::string& ambient_text, const std::string& format,
                long long max_order, std::ostream& out) {
  const PermGroup sub = build_group(*parse_group(group_text), max_order);
  const PermGroup target = build_group(*parse_group(target_text), max_order);
  const PermGroup ambient = build_group(*parse_group(ambient_text), max_order);
  const long long j_count = conjugators_into(sub.elements(), target.elements(), ambient);
  const long long k_count = ambient_centralizer_order(sub.elements(), ambient);
  if (format == "text") {
    out << "I = " << sub.label() << ", D = " << target.label()
        << ", S = " << ambient.label() << "\n";
    out << "j = " << j_count << "  (conjugators of I into D)\n";
    out << "k = " << k_count << "  (ambient centralizer order of I)\n";
  } else {
    json j;
    j["group"] = group_json(sub);
    j["target"] = group_json(target);
    j["ambient"] = group_json(ambient);
    j["j"] = j_count;
    j["k"] = k_count;
    out << j.dump(2) << "\n";
  }
  return 0;
}

int run_catalog(const std::string& format, long long max_order, std::ostream& out) {
  json entries = json::array();
  std::ostringstream text;
  for (const auto& entry : catalog()) {
    const PermGroup group = build_group(*parse_group(entry.group_text), max_order);
    if (format == "text") {
      text << entry.name << ": " << entry.group_text << "  order " << group.order()
           << "  degree " << group.degree() << "  rational "
           << (entry.rational ? "yes" : "no") << "\n";
    } else {
      entries.push_back(json{{"name", entry.name},
                             {"expr", entry.group_text},
                             {"order", group.order()},
                             {"degree", group.degree()},
                             {"rational", entry.rational}});
    }
  }
  if (format == "text") out << text.str();
  else out << entries.dump(2) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tame local masses for permutation groups built from "
               "symmetric groups by wreath and cross products"};
  app.name("massform");
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  long long max_order = kDefaultMaxOrder;
  app.add_option("--max-order", max_order, "Group order cap")
      ->envname("MASSFORM_MAX_ORDER")
      ->capture_default_str();

  std::string group_text, counting_text, target_text, ambient_text;
  std::string residue_text = "1";
  std::string by = "total";
  int sn_n = 1;

  // parent options (--format, --max-order) may appear after the subcommand
  app.fallthrough();

  CLI::App* mass_cmd = app.add_subcommand("mass", "Masses for one group and counting");
  mass_cmd->add_option("--group", group_text, "Group DSL expression")->required();
  mass_cmd->add_option("--counting", counting_text, "Counting DSL expression")->required();
  mass_cmd->add_option("--residue", residue_text, "Residue a, or 'all'");
  mass_cmd->add_option("--by", by, "Stratification")
      ->check(CLI::IsMember({"total", "type", "wreath-type", "product-type", "image"}));

  CLI::App* check_cmd =
      app.add_subcommand("check", "Mass-formula existence over all residues");
  check_cmd->add_option("--group", group_text, "Group DSL expression")->required();
  check_cmd->add_option("--counting", counting_text, "Counting DSL expression")->required();
  std::string check_residue = "all";
  check_cmd->add_option("--residue", check_residue, "Residue a, or 'all'");

  CLI::App* rational_cmd =
      app.add_subcommand("rational", "Rational-character-table verdict");
  rational_cmd->add_option("--group", group_text, "Group DSL expression")->required();

  CLI::App* reference_cmd = app.add_subcommand("reference", "Reference formulas");
  CLI::App* sn_cmd = reference_cmd->add_subcommand("sn", "Unscaled S_n mass polynomial");
  sn_cmd->add_option("--n", sn_n, "Symmetric group arity")->required();
  reference_cmd->require_subcommand(1);

  CLI::App* ambient_cmd =
      app.add_subcommand("ambient", "Conjugator and centralizer counts in an ambient group");
  ambient_cmd->add_option("--group", group_text, "Subgroup I")->required();
  ambient_cmd->add_option("--target", target_text, "Target subgroup D")->required();
  ambient_cmd->add_option("--in", ambient_text, "Ambient group S")->required();

  app.add_subcommand("catalog", "List the built-in group catalog");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (mass_cmd->parsed())
      return run_mass(group_text, counting_text, residue_text, by, format, max_order,
                      out, err);
    if (check_cmd->parsed())
      return run_check(group_text, counting_text, check_residue, format, max_order, out,
                       err);
    if (rational_cmd->parsed()) return run_rational(group_text, format, max_order, out);
    if (reference_cmd->parsed()) return run_reference_sn(sn_n, format, out);
    if (ambient_cmd->parsed())
      return run_ambient(group_text, target_text, ambient_text, format, max_order, out);
    return run_catalog(format, max_order, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const SizeCapError& e) {
    err << "size cap exceeded: " << e.what() << "\n";
    return 4;
  } catch (const InvalidResidue& e) {
    err << "invalid residue: " << e.what() << "\n";
    return 5;
  } catch (const StructureError& e) {
    err << "incompatible input: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace massform::cli
