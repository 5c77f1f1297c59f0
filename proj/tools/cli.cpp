#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include "triangle_words/burnside.hpp"
#include "triangle_words/classify.hpp"
#include "triangle_words/error.hpp"
#include "triangle_words/group_io.hpp"
#include "triangle_words/lattice.hpp"
#include "triangle_words/psl2.hpp"
#include "triangle_words/vondyck.hpp"
#include "triangle_words/words.hpp"

namespace triangle_words::cli {

namespace {

using nlohmann::ordered_json;

std::string plain_value(const ordered_json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array()) {
    std::string out = "{";
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i > 0) out += ",";
      out += plain_value(value[i]);
    }
    return out + "}";
  }
  return value.dump();
}

// One flat record per invocation, printed as "key: value" lines or as a
// single JSON object.
class Report {
 public:
  explicit Report(const std::string& command) { data_["command"] = command; }

  template <typename T>
  void set(const std::string& key, T&& value) {
    data_[key] = std::forward<T>(value);
  }

  void write(std::ostream& out, const std::string& format) const {
    if (format == "json") {
      out << data_.dump() << '\n';
      return;
    }
    for (const auto& [key, value] : data_.items()) out << key << ": " << plain_value(value) << '\n';
  }

 private:
  ordered_json data_;
};

UnitResidue unit_or_invalid_r(Integer r, Integer modulus) {
  try {
    return UnitResidue(r, modulus);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::not_coprime) throw;
    fail(ErrorCode::invalid_r, std::to_string(r) + " is not a unit modulo " +
                                   std::to_string(modulus));
  }
}

std::vector<Integer> values_of(const std::vector<UnitResidue>& residues) {
  std::vector<Integer> out;
  out.reserve(residues.size());
  for (const auto& r : residues) out.push_back(r.value());
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse_error, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void add_format_option(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "json"}))
      ->capture_default_str();
}

struct ClassifyArgs {
  Integer k = 0, l = 0, m = 0, r = 0;
  bool honda = false;
};

int cmd_classify(const ClassifyArgs& a, bool l_given, const std::string& format,
                 std::ostream& out) {
  Report report("classify");
  if (a.honda) {
    if (l_given) fail(ErrorCode::invalid_signature, "--l is not used with --honda");
    const auto verdict = classify_honda(a.k, a.m, a.r);
    const Integer n = std::lcm(a.k, a.m);
    const UnitResidue r(a.r, n);
    report.set("mode", "honda");
    report.set("k", a.k);
    report.set("m", a.m);
    report.set("r", r.value());
    report.set("modulus", n);
    if (std::gcd(a.k, a.m) <= 2) report.set("r_star", crt_star(a.k, a.m, r).value());
    report.set("universal", verdict.universal);
    report.set("reason", std::string(to_string(verdict.reason)));
    report.write(out, format);
    return verdict.universal ? kPositive : kNegative;
  }
  if (!l_given) fail(ErrorCode::invalid_signature, "--l is required without --honda");
  const auto verdict = classify_burnside(a.k, a.l, a.m, a.r);
  const TriangleSignature signature(a.k, a.l, a.m);
  report.set("mode", "burnside");
  report.set("signature", signature.to_string());
  report.set("r", UnitResidue(a.r, signature.lcm()).value());
  report.set("modulus", signature.lcm());
  report.set("universal", verdict.universal);
  report.set("reason", std::string(to_string(verdict.reason)));
  report.write(out, format);
  return verdict.universal ? kPositive : kNegative;
}

int cmd_multiplier(Integer k, Integer l, Integer m, bool check_theorem, const std::string& format,
                   std::ostream& out) {
  const TriangleSignature signature(k, l, m);
  const auto set = multiplier_set(signature);
  Report report("multiplier");
  report.set("signature", signature.to_string());
  report.set("modulus", signature.lcm());
  report.set("multiplier_set", values_of(set));
  report.set("size", set.size());
  if (!check_theorem) {
    report.write(out, format);
    return kPositive;
  }
  bool agree = true;
  for (const auto& r : unit_group(signature.lcm())) {
    const bool in_set = std::find(set.begin(), set.end(), r) != set.end();
    if (classify_burnside(k, l, m, r).universal != in_set) agree = false;
  }
  report.set("theorem_agreement", agree);
  report.write(out, format);
  return agree ? kPositive : kInternalError;
}

int cmd_witness(Integer k, Integer l, Integer m, Integer r_raw, const std::string& format,
                std::ostream& out, std::ostream& err) {
  const TriangleSignature signature(k, l, m);
  if (!signature.is_spherical()) {
    fail(ErrorCode::not_finite, "no finite realization for " + signature.to_string());
  }
  const auto r = unit_or_invalid_r(r_raw, signature.lcm());
  const auto& v = vondyck(k, l, m);
  const auto w = universal_witness(v, r);
  const FiniteGroup& g = *v.group;

  const auto b = g.mul(g.inv(v.a), v.c);
  const auto lhs = g.mul(g.power(v.a, r.value()), g.conjugate(w.g, g.power(b, r.value())));
  const auto rhs = g.conjugate(w.h, g.power(v.c, r.value()));
  const bool verified = verify_universal_witness(v, r, w) && lhs == rhs;

  Report report("witness");
  report.set("signature", signature.to_string());
  report.set("r", r.value());
  report.set("modulus", signature.lcm());
  report.set("group_order", g.order());
  report.set("a", g.element_name(v.a));
  report.set("c", g.element_name(v.c));
  report.set("g", g.element_name(w.g));
  report.set("h", g.element_name(w.h));
  report.set("lhs", g.element_name(lhs));  // a^r * g (a^-1 c)^r g^-1
  report.set("rhs", g.element_name(rhs));  // h c^r h^-1
  report.set("verified", verified);
  if (!verified) {
    err << "error: witness failed re-verification\n";
    return kInternalError;
  }
  report.write(out, format);
  return kPositive;
}

int cmd_reduce(const std::string& group_path, const std::optional<std::string>& word,
               const std::optional<std::string>& word_file, const std::string& format,
               std::ostream& out) {
  if (word.has_value() == word_file.has_value()) {
    fail(ErrorCode::parse_error, "give the word either inline or with --word-file");
  }
  const auto group = load_group_file(group_path, group_cap_from_env());
  const std::string text = word ? *word : read_file(*word_file);
  const auto reduced = normalize(parse_letters(text), group);

  std::string echo;
  std::istringstream tokens(text);
  for (std::string t; tokens >> t;) echo += (echo.empty() ? "" : " ") + t;

  Report report("reduce");
  report.set("group_order", group->order());
  report.set("input", echo);
  report.set("reduced", format_word(reduced));
  report.set("length", reduced.length());
  report.set("named", describe_word(reduced));
  report.write(out, format);
  return kPositive;
}

int cmd_finite_check(const std::string& group_path, Integer s, const std::string& format,
                     std::ostream& out) {
  const auto group = load_group_file(group_path, group_cap_from_env());
  const bool ok = burnside_count_check(*group, s);
  Report report("finite-check");
  report.set("group_order", group->order());
  report.set("exponent", group->exponent());
  report.set("classes", group->classes().size());
  report.set("s", s);
  report.set("burnside_count_check", ok);
  report.write(out, format);
  return ok ? kPositive : kNegative;
}

int cmd_orevkov(const std::vector<std::string>& texts, bool numeric, const std::string& format,
                std::ostream& out) {
  const Angle a = Angle::parse(texts[0]);
  const Angle b = Angle::parse(texts[1]);
  const Angle c = Angle::parse(texts[2]);
  const bool solvable = orevkov_solvable(a, b, c);

  const Integer den = std::lcm(std::lcm(a.den(), b.den()), c.den());
  const Integer num = a.num() * (den / a.den()) + b.num() * (den / b.den()) +
                      c.num() * (den / c.den());
  const Integer g = std::gcd(num, den);

  Report report("orevkov");
  report.set("a", a.to_string());
  report.set("b", b.to_string());
  report.set("c", c.to_string());
  report.set("sum", std::to_string(num / g) + "/" + std::to_string(den / g));
  report.set("solvable", solvable);
  if (numeric) {
    try {
      const auto result = numeric_triple_search(a, b, c);
      report.set("numeric", result.solvable ? "solvable" : "unsolvable");
      if (result.solvable) {
        report.set("numeric_phi", result.phi);
        report.set("numeric_s", result.s);
        report.set("numeric_theta", result.theta);
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::inconclusive) throw;
      report.set("numeric", "inconclusive");
    }
  }
  report.write(out, format);
  return solvable ? kPositive : kNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for quasi-Burnside and quasi-Honda properties", "triangle-words"};
  app.require_subcommand(1);

  std::string format = "plain";

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "Classify (k,l,m,r) or, with --honda, (k,m,r)");
  classify->add_option("--k", classify_args.k)->required();
  auto* l_option = classify->add_option("--l", classify_args.l);
  classify->add_option("--m", classify_args.m)->required();
  classify->add_option("--r", classify_args.r)->required();
  classify->add_flag("--honda", classify_args.honda, "Use the commutator classification");
  add_format_option(classify, format);

  Integer mk = 0, ml = 0, mm = 0;
  bool check_theorem = false;
  auto* multiplier = app.add_subcommand("multiplier", "Print the multiplier set of (k,l,m)");
  multiplier->add_option("--k", mk)->required();
  multiplier->add_option("--l", ml)->required();
  multiplier->add_option("--m", mm)->required();
  multiplier->add_flag("--check-theorem", check_theorem,
                       "Compare every unit with the classification");
  add_format_option(multiplier, format);

  Integer wk = 0, wl = 0, wm = 0, wr = 0;
  auto* witness = app.add_subcommand("witness", "Find conjugators in a finite realization");
  witness->add_option("--k", wk)->required();
  witness->add_option("--l", wl)->required();
  witness->add_option("--m", wm)->required();
  witness->add_option("--r", wr)->required();
  add_format_option(witness, format);

  std::string reduce_group;
  std::optional<std::string> word, word_file;
  auto* reduce = app.add_subcommand("reduce", "Normalize a word over G * <b>");
  reduce->add_option("--group", reduce_group, "Group file")->required();
  reduce->add_option("word", word, "Tokens g:<id>, b, b-");
  reduce->add_option("--word-file", word_file, "File holding the word");
  add_format_option(reduce, format);

  std::string finite_group;
  Integer s = 0;
  auto* finite = app.add_subcommand("finite-check", "Check the Burnside counting identity");
  finite->add_option("--group", finite_group, "Group file")->required();
  finite->add_option("--s", s)->required();
  add_format_option(finite, format);

  std::vector<std::string> angles;
  bool numeric = false;
  auto* orevkov = app.add_subcommand("orevkov", "Decide 1 in C_a C_b C_c in PSL2(R)");
  orevkov->add_option("angles", angles, "Three angles p/q")->required()->expected(3);
  orevkov->add_flag("--numeric", numeric, "Also run the numeric conjugator search");
  add_format_option(orevkov, format);

  std::vector<const char*> argv{"triangle-words"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kPositive : kInputError;
  }

  try {
    if (*classify) return cmd_classify(classify_args, l_option->count() > 0, format, out);
    if (*multiplier) return cmd_multiplier(mk, ml, mm, check_theorem, format, out);
    if (*witness) return cmd_witness(wk, wl, wm, wr, format, out, err);
    if (*reduce) return cmd_reduce(reduce_group, word, word_file, format, out);
    if (*finite) return cmd_finite_check(finite_group, s, format, out);
    if (*orevkov) return cmd_orevkov(angles, numeric, format, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_internal() ? kInternalError : kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInputError;
}

}  // namespace triangle_words::cli
