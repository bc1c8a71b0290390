#include "ginv/corpus.hpp"
#include "ginv/inverse.hpp"
#include "ginv/json_io.hpp"
#include "ginv/oracle.hpp"
#include "ginv/ring.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace ginv;

// 0 success / valid; 2 meaningful mathematical negative; 1 usage, I/O or
// configuration problem.
int exit_code_for(Err e) {
  switch (e) {
    case Err::no_solution:
    case Err::not_a_unit:
    case Err::not_regular:
    case Err::not_group_invertible:
    case Err::not_one_three_invertible:
    case Err::not_one_four_invertible:
    case Err::not_core_invertible:
    case Err::not_dual_core_invertible:
    case Err::precondition_violated:
      return 2;
    default:
      return 1;
  }
}

int emit_failure(const Failure& f) {
  std::cout << failure_to_json(f).dump() << "\n";
  return exit_code_for(f.code);
}

Err negative_for(InverseKind kind) {
  switch (kind) {
    case InverseKind::inner: return Err::not_regular;
    case InverseKind::group: return Err::not_group_invertible;
    case InverseKind::one_three: return Err::not_one_three_invertible;
    case InverseKind::one_four: return Err::not_one_four_invertible;
    case InverseKind::core: return Err::not_core_invertible;
    case InverseKind::dual_core: return Err::not_dual_core_invertible;
  }
  return Err::internal_error;
}

struct ElementArg {
  std::string inline_text;
  std::string file;

  void attach(CLI::App* cmd, const std::string& flag, const std::string& what) {
    auto* inline_opt = cmd->add_option("--" + flag, inline_text, what + " as inline JSON");
    auto* file_opt =
        cmd->add_option("--" + flag + "-file", file, what + " as a path to a JSON file");
    inline_opt->excludes(file_opt);
  }

  Result<Element> load(const RingPtr& ring, const std::string& flag) const {
    std::string text = inline_text;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) return fail(Err::malformed_spec, "cannot open " + file);
      std::ostringstream buffer;
      buffer << in.rdbuf();
      text = buffer.str();
    }
    if (text.empty())
      return fail(Err::malformed_spec, "--" + flag + " or --" + flag + "-file is required");
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded())
      return fail(Err::malformed_spec, "--" + flag + " is not valid JSON");
    return element_from_json(ring, j);
  }
};

Result<InverseKind> parse_kind(const std::string& s) {
  auto k = inverse_kind_from(s);
  if (!k)
    return fail(Err::malformed_spec,
                "unknown kind '" + s +
                    "' (expected inner, group, one_three, one_four, core or dual_core)");
  return *k;
}

// DEFINITIONAL everywhere except core kinds over the infinite rational
// matrix ring, where the five-equation certificate is the cheaper default.
CertForm default_form(const RingPtr& ring, InverseKind kind) {
  const bool core_kind = kind == InverseKind::core || kind == InverseKind::dual_core;
  if (core_kind && !ring->is_finite()) return CertForm::five_eq;
  return CertForm::definitional;
}

Result<CertForm> resolve_form(const std::string& form_s, const RingPtr& ring,
                              InverseKind kind) {
  if (form_s.empty()) return default_form(ring, kind);
  auto f = cert_form_from(form_s);
  if (!f)
    return fail(Err::malformed_spec, "unknown form '" + form_s +
                                         "' (expected DEFINITIONAL, FIVE_EQ or THREE_EQ)");
  return *f;
}

Result<Element> dispatch_compute(InverseKind kind, const Element& a) {
  switch (kind) {
    case InverseKind::inner: return inner_inverse(a);
    case InverseKind::group: return group_inverse(a);
    case InverseKind::one_three: return one_three_inverse(a);
    case InverseKind::one_four: return one_four_inverse(a);
    case InverseKind::core: return core_inverse(a);
    case InverseKind::dual_core: return dual_core_inverse(a);
  }
  return Result<Element>(fail(Err::internal_error, "unhandled inverse kind"));
}

int run_compute(const std::string& ring_s, const std::string& kind_s,
                const std::string& form_s, const ElementArg& element) {
  auto ring = Ring::make(ring_s);
  if (!ring.ok()) return emit_failure(ring.failure());
  auto kind = parse_kind(kind_s);
  if (!kind.ok()) return emit_failure(kind.failure());
  auto a = element.load(ring.value(), "element");
  if (!a.ok()) return emit_failure(a.failure());
  auto form = resolve_form(form_s, ring.value(), kind.value());
  if (!form.ok()) return emit_failure(form.failure());

  auto x = dispatch_compute(kind.value(), a.value());
  if (!x.ok()) return emit_failure(x.failure());
  auto cert = verify(kind.value(), a.value(), x.value(), form.value());
  if (!cert.ok()) return emit_failure(cert.failure());

  Json out;
  out["result"] = element_to_json(x.value());
  out["certificate"] = certificate_to_json(cert.value());
  std::cout << out.dump() << "\n";
  return 0;
}

int run_verify(const std::string& ring_s, const std::string& kind_s, const std::string& form_s,
               const ElementArg& a_arg, const ElementArg& x_arg) {
  auto ring = Ring::make(ring_s);
  if (!ring.ok()) return emit_failure(ring.failure());
  auto kind = parse_kind(kind_s);
  if (!kind.ok()) return emit_failure(kind.failure());
  auto a = a_arg.load(ring.value(), "a");
  if (!a.ok()) return emit_failure(a.failure());
  auto x = x_arg.load(ring.value(), "x");
  if (!x.ok()) return emit_failure(x.failure());
  auto form = resolve_form(form_s, ring.value(), kind.value());
  if (!form.ok()) return emit_failure(form.failure());

  auto cert = verify(kind.value(), a.value(), x.value(), form.value());
  if (!cert.ok()) return emit_failure(cert.failure());
  std::cout << certificate_to_json(cert.value()).dump() << "\n";
  return cert.value().valid ? 0 : 2;
}

int run_classify(const std::string& ring_s, const std::string& format) {
  auto ring = Ring::make(ring_s);
  if (!ring.ok()) return emit_failure(ring.failure());
  auto report = oracle::classify(ring.value());
  if (!report.ok()) return emit_failure(report.failure());
  if (format == "table")
    std::cout << oracle::classification_to_text(report.value());
  else
    std::cout << oracle::classification_to_json(report.value()).dump() << "\n";
  return 0;
}

int run_search(const std::string& ring_s, const std::string& kind_s,
               const ElementArg& element) {
  auto ring = Ring::make(ring_s);
  if (!ring.ok()) return emit_failure(ring.failure());
  auto kind = parse_kind(kind_s);
  if (!kind.ok()) return emit_failure(kind.failure());
  auto a = element.load(ring.value(), "element");
  if (!a.ok()) return emit_failure(a.failure());

  auto all = oracle::find_all(kind.value(), a.value());
  if (!all.ok()) return emit_failure(all.failure());
  if (all.value().empty())
    return emit_failure(fail(negative_for(kind.value()),
                             "exhaustive search found no " +
                                 std::string(inverse_kind_name(kind.value())) + " inverse"));
  Json matches = Json::array();
  for (const Element& e : all.value()) matches.push_back(element_to_json(e));
  Json out;
  out["kind"] = std::string(inverse_kind_name(kind.value()));
  out["element"] = element_to_json(a.value());
  out["count"] = all.value().size();
  out["matches"] = std::move(matches);
  std::cout << out.dump() << "\n";
  return 0;
}

int run_demo(const std::string& id, const std::string& corpus_dir) {
  auto scenario = corpus_dir.empty() ? corpus::load_builtin(id)
                                     : corpus::load_from_dir(corpus_dir, id);
  if (!scenario.ok()) return emit_failure(scenario.failure());
  auto report = corpus::run_scenario(scenario.value());
  if (!report.ok()) return emit_failure(report.failure());
  std::cout << corpus::report_to_json(report.value()).dump() << "\n";
  return report.value().pass ? 0 : 2;
}

int run_sum(const std::string& ring_s, const std::string& mode, const ElementArg& a_arg,
            const ElementArg& b_arg) {
  auto ring = Ring::make(ring_s);
  if (!ring.ok()) return emit_failure(ring.failure());
  auto a = a_arg.load(ring.value(), "a");
  if (!a.ok()) return emit_failure(a.failure());
  auto b = b_arg.load(ring.value(), "b");
  if (!b.ok()) return emit_failure(b.failure());

  InverseKind kind;
  Result<Element> x = [&]() -> Result<Element> {
    if (mode == "core") {
      kind = InverseKind::core;
      return core_sum(a.value(), b.value());
    }
    if (mode == "dual") {
      kind = InverseKind::dual_core;
      return dual_core_sum(a.value(), b.value());
    }
    if (mode == "group") {
      kind = InverseKind::group;
      return group_sum(a.value(), b.value());
    }
    kind = InverseKind::core;
    return Result<Element>(
        fail(Err::malformed_spec, "unknown mode '" + mode + "' (expected core, dual or group)"));
  }();
  if (!x.ok()) return emit_failure(x.failure());

  const Element subject = a.value() + b.value();
  auto form = default_form(ring.value(), kind);
  auto cert = verify(kind, subject, x.value(), form);
  if (!cert.ok()) return emit_failure(cert.failure());
  Json out;
  out["result"] = element_to_json(x.value());
  out["certificate"] = certificate_to_json(cert.value());
  std::cout << out.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized inverses in rings with involution"};
  app.require_subcommand(1);

  std::string ring_s, kind_s, form_s, mode_s, format_s = "json", corpus_dir, demo_id;
  int jobs = 1;
  ElementArg element, a_arg, x_arg, b_arg;

  auto* compute = app.add_subcommand("compute", "compute an inverse and certify it");
  compute->add_option("--ring", ring_s, "ring descriptor, e.g. zmod:8 or mat:rat:2")->required();
  compute->add_option("--kind", kind_s, "inner, group, one_three, one_four, core, dual_core")
      ->required();
  compute->add_option("--form", form_s, "DEFINITIONAL, FIVE_EQ or THREE_EQ");
  element.attach(compute, "element", "the subject element");

  auto* verify_cmd = app.add_subcommand("verify", "check a claimed inverse");
  verify_cmd->add_option("--ring", ring_s, "ring descriptor")->required();
  verify_cmd->add_option("--kind", kind_s, "inverse kind")->required();
  verify_cmd->add_option("--form", form_s, "certificate form");
  a_arg.attach(verify_cmd, "a", "the subject element");
  x_arg.attach(verify_cmd, "x", "the claimed inverse");

  auto* classify = app.add_subcommand("classify", "classify every element of a finite ring");
  classify->add_option("--ring", ring_s, "ring descriptor")->required();
  classify->add_option("--format", format_s, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  classify->add_option("--jobs", jobs, "worker count (accepted for compatibility; scans are sequential)")
      ->check(CLI::PositiveNumber);

  auto* search = app.add_subcommand("search", "list all inverses of one element by scan");
  search->add_option("--ring", ring_s, "ring descriptor")->required();
  search->add_option("--kind", kind_s, "inverse kind")->required();
  search->add_option("--jobs", jobs, "worker count (accepted for compatibility; scans are sequential)")
      ->check(CLI::PositiveNumber);
  element.attach(search, "element", "the subject element");

  auto* demo = app.add_subcommand("demo", "replay a corpus scenario");
  demo->add_option("id", demo_id, "scenario id, e.g. ex4.2")->required();
  demo->add_option("--corpus-dir", corpus_dir, "load scenarios from this directory");

  auto* sum = app.add_subcommand("sum", "additive formula for a + b under the zero-product hypotheses");
  sum->add_option("--ring", ring_s, "ring descriptor")->required();
  sum->add_option("--mode", mode_s, "core, dual or group")->required();
  a_arg.attach(sum, "a", "left summand");
  b_arg.attach(sum, "b", "right summand");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (compute->parsed()) return run_compute(ring_s, kind_s, form_s, element);
    if (verify_cmd->parsed()) return run_verify(ring_s, kind_s, form_s, a_arg, x_arg);
    if (classify->parsed()) return run_classify(ring_s, format_s);
    if (search->parsed()) return run_search(ring_s, kind_s, element);
    if (demo->parsed()) return run_demo(demo_id, corpus_dir);
    if (sum->parsed()) return run_sum(ring_s, mode_s, a_arg, b_arg);
  } catch (const ginv::GinvError& e) {
    std::string detail = e.what();
    const std::string prefix = std::string(ginv::err_name(e.code())) + ": ";
    if (detail.rfind(prefix, 0) == 0) detail = detail.substr(prefix.size());
    std::cout << ginv::failure_to_json(ginv::fail(e.code(), detail)).dump() << "\n";
    return exit_code_for(e.code());
  }
  return 1;
}
