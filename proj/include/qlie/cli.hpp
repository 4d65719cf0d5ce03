#pragma once

#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qlie/expr.hpp"
#include "qlie/io.hpp"

namespace qlie::cli {

// Exit codes: 0 success/pass, 1 theorem-check failure, 2 input error,
// 3 unsupported mode.
enum ExitCode { kOk = 0, kTheoremFailure = 1, kInputError = 2, kUnsupportedMode = 3 };

namespace detail {

inline EnvMode resolve_mode(const LiePresentation& P, const std::string& mode) {
  if (mode == "full") return EnvMode::Full;
  if (mode == "restricted") return EnvMode::Restricted;
  return P.pmap && P.field.kind == FieldKind::Prime ? EnvMode::Restricted : EnvMode::Full;
}

inline LiePresentation load_checked(const std::string& path) {
  LiePresentation P = load_presentation(path);
  PresentationReport rep = validate_presentation(P);
  if (!rep.ok) {
    std::string msg = "presentation '" + path + "' is invalid:";
    for (const auto& issue : rep.issues) msg += "\n  " + issue.detail;
    throw input_error(msg);
  }
  return P;
}

inline void emit_report(const VerificationReport& rep, const std::string& format, std::ostream& out,
                        std::ostream& err) {
  if (format == "json")
    out << report_json(rep).dump(2) << "\n";
  else
    out << report_text(rep);
  err << "# wall time: " << rep.wall_ms << " ms\n";
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computer algebra for (restricted) Lie algebras, their enveloping algebras, "
               "and universal derivative/endomorphism checks"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string format = "text";
  std::string mode = "auto";
  std::uint64_t seed = 0x51EDD5EEDULL;
  std::uint32_t parallel = 1;
  app.add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--mode", mode)->check(CLI::IsMember({"auto", "full", "restricted"}))->capture_default_str();
  app.add_option("--seed", seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--parallel", parallel, "worker cap for verification sweeps")->capture_default_str();

  std::string file, expr_text;
  std::uint32_t degree = 2;

  CLI::App* validate = app.add_subcommand("validate", "check the Lie axioms (and p-map, when present)");
  validate->add_option("file", file)->required();

  CLI::App* nf = app.add_subcommand("nf", "normal form of an expression");
  nf->add_option("file", file)->required();
  nf->add_option("expr", expr_text)->required();

  CLI::App* coprod = app.add_subcommand("coprod", "coproduct of an expression");
  coprod->add_option("file", file)->required();
  coprod->add_option("expr", expr_text)->required();
  coprod->add_option("--degree", degree)->required();

  CLI::App* primitive = app.add_subcommand("primitive", "primitivity test with witness");
  primitive->add_option("file", file)->required();
  primitive->add_option("expr", expr_text)->required();

  CLI::App* derivations = app.add_subcommand("derivations", "verify the universal-derivative theorem");
  derivations->add_option("file", file)->required();
  derivations->add_option("--degree", degree)->required();

  CLI::App* endos = app.add_subcommand("endos", "verify the universal-endomorphism theorem");
  endos->add_option("file", file)->required();
  endos->add_option("--degree", degree)->required();

  CLI::App* closure = app.add_subcommand("closure", "filtered basis of the Lie subalgebra <L,x>");
  closure->add_option("file", file)->required();
  closure->add_option("--degree", degree)->required();

  std::vector<const char*> argv;
  argv.push_back("qlie");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (validate->parsed()) {
      LiePresentation P = load_presentation(file);
      PresentationReport rep = validate_presentation(P);
      PmapReport pmap_rep;
      bool ran_pmap = false;
      if (rep.ok && P.pmap && P.field.kind == FieldKind::Prime) {
        pmap_rep = validate_pmap(P, seed);
        ran_pmap = true;
      }
      bool ok = rep.ok && (!ran_pmap || pmap_rep.ok);
      if (format == "json") {
        Json j;
        j["presentation"] = P.summary();
        j["ok"] = ok;
        Json issues = Json::array();
        for (const auto& issue : rep.issues)
          issues.push_back({{"kind", issue.kind == PresentationIssue::Kind::Jacobi ? "jacobi" : "malformed"},
                            {"detail", issue.detail}});
        for (const auto& issue : pmap_rep.issues)
          issues.push_back({{"kind", "pmap"}, {"category", pmap_category_str(issue.category)}, {"detail", issue.detail}});
        j["issues"] = issues;
        j["notes"] = pmap_rep.notes;
        out << j.dump(2) << "\n";
      } else {
        out << "presentation: " << P.summary() << "\n";
        for (const auto& issue : rep.issues) out << "issue       : " << issue.detail << "\n";
        for (const auto& issue : pmap_rep.issues)
          out << "issue       : [" << pmap_category_str(issue.category) << "] " << issue.detail << "\n";
        for (const auto& n : pmap_rep.notes) out << "note        : " << n << "\n";
        out << "result      : " << (ok ? "OK" : "INVALID") << "\n";
      }
      return ok ? kOk : kInputError;
    }

    LiePresentation P = detail::load_checked(file);
    FreeProduct A(P, detail::resolve_mode(P, mode));

    if (nf->parsed()) {
      FPElement v = evaluate_expression(A, expr_text);
      if (format == "json") {
        Json j;
        j["expr"] = expr_text;
        j["normal_form"] = fp_json(P, v);
        out << j.dump(2) << "\n";
      } else {
        out << fp_str(P, v) << "\n";
      }
      return kOk;
    }

    if (coprod->parsed()) {
      FPElement v = evaluate_expression(A, expr_text);
      TensorElement t = coproduct(A, v, degree);
      if (format == "json") {
        Json j;
        j["expr"] = expr_text;
        Json terms = Json::array();
        for (const auto& [k, c] : t.terms)
          terms.push_back(Json::array({word_str(P, k.first), word_str(P, k.second), c.str()}));
        j["coproduct"] = terms;
        out << j.dump(2) << "\n";
      } else {
        out << tensor_str(P, t) << "\n";
      }
      return kOk;
    }

    if (primitive->parsed()) {
      FPElement v = evaluate_expression(A, expr_text);
      PrimitivityCheck pc = is_primitive(A, v);
      if (format == "json") {
        Json j;
        j["expr"] = expr_text;
        j["primitive"] = pc.primitive;
        if (pc.witness)
          j["witness"] = Json::array(
              {word_str(P, pc.witness->first.first), word_str(P, pc.witness->first.second), pc.witness->second.str()});
        out << j.dump(2) << "\n";
      } else {
        out << (pc.primitive ? "primitive" : "not primitive") << "\n";
        if (pc.witness)
          out << "witness     : " << pc.witness->second.str() << "*(" << word_str(P, pc.witness->first.first)
              << " (x) " << word_str(P, pc.witness->first.second) << ")\n";
      }
      return kOk;
    }

    if (derivations->parsed()) {
      VerificationReport rep = verify_q11(A, degree, parallel);
      detail::emit_report(rep, format, out, err);
      return rep.pass ? kOk : kTheoremFailure;
    }

    if (endos->parsed()) {
      VerificationReport rep = verify_q13(A, degree, parallel);
      detail::emit_report(rep, format, out, err);
      return rep.pass ? kOk : kTheoremFailure;
    }

    if (closure->parsed()) {
      SubspaceBasis B = adjoin_closure(A, degree);
      auto dims = B.degree_dims(degree);
      if (format == "json") {
        Json j;
        j["presentation"] = P.summary();
        j["mode"] = mode_str(A.env().mode());
        j["degree"] = degree;
        Json d = Json::array();
        for (std::uint32_t k = 1; k <= degree; ++k) d.push_back(dims[k]);
        j["degree_dims"] = d;
        j["total_dim"] = B.dimension();
        out << j.dump(2) << "\n";
      } else {
        out << "presentation: " << P.summary() << "\n";
        out << "mode        : " << mode_str(A.env().mode()) << "\n";
        out << "degree dims :";
        for (std::uint32_t k = 1; k <= degree; ++k) out << " " << dims[k];
        out << "\ntotal dim   : " << B.dimension() << "\n";
      }
      return kOk;
    }
  } catch (const unsupported_mode& e) {
    err << "error: " << e.what() << "\n";
    return kUnsupportedMode;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace qlie::cli
