#include "affcryst/commands.hpp"

#include <sstream>
#include <thread>

#include "affcryst/constructions.hpp"
#include "affcryst/document.hpp"
#include "json_convert.hpp"

namespace affcryst {

namespace {

using jsonio::ordered_json;

CommandOutcome run_guarded(const std::function<CommandOutcome()>& body) {
  auto error_json = [](const char* what, const std::string& message) {
    ordered_json j;
    j["kind"] = "error";
    j["error"] = what;
    j["message"] = message;
    return j.dump(2);
  };
  try {
    return body();
  } catch (const ParseError& e) {
    return {2, error_json("parse", e.what())};
  } catch (const InvariantError& e) {
    return {3, error_json("invariant", e.what())};
  } catch (const std::exception& e) {
    return {4, error_json("internal", e.what())};
  }
}

ordered_json verdict_header(const char* command) {
  ordered_json j;
  j["kind"] = "verdict";
  j["command"] = command;
  return j;
}

}  // namespace

CommandOutcome cmd_check(const std::string& input_text) {
  return run_guarded([&]() -> CommandOutcome {
    Document doc = parse_document(input_text);
    ordered_json out = verdict_header("check");
    if (const AffineRep* rep = std::get_if<AffineRep>(&doc.payload)) {
      CrystVerdict v = is_crystallographic(*rep);
      out["crystallographic"] = v.crystallographic;
      out["delta"] = jsonio::scalar_to_json(v.delta);
      out["engel_ok"] = v.engel_ok;
      out["details"] = {{"n", rep->dim()}};
    } else if (const PolycyclicRep* rep =
                   std::get_if<PolycyclicRep>(&doc.payload)) {
      PolyVerdict v = is_crystallographic(*rep);
      out["crystallographic"] = v.crystallographic;
      out["delta"] = jsonio::scalar_to_json(v.delta);
      out["engel_ok"] = v.engel_ok;
      out["shadow_dim"] = v.shadow_dim;
      out["details"] = {{"n", rep->dim()},
                        {"supplement", rep->supplement_size()}};
    } else {
      throw ParseError("check expects a rep or pcrep document");
    }
    return {0, out.dump(2)};
  });
}

CommandOutcome cmd_build(const std::string& kind, const std::string& input_text,
                         unsigned long seed) {
  return run_guarded([&]() -> CommandOutcome {
    Document doc = parse_document(input_text);
    const LieDocument* lie = std::get_if<LieDocument>(&doc.payload);
    if (!lie) throw ParseError("build expects a lie document");

    ordered_json meta;
    meta["build"] = kind;
    AffineRep rep = [&]() -> AffineRep {
      if (kind == "two-step") return two_step_rep(lie->algebra);
      if (kind == "graded") {
        if (!lie->grading)
          throw ParseError("graded build needs a 'weights' list");
        return graded_rep(lie->algebra, *lie->grading);
      }
      if (kind == "derivation") {
        if (!lie->derivation)
          throw ParseError("derivation build needs a 'derivation' matrix");
        return derivation_rep(lie->algebra, *lie->derivation);
      }
      if (kind == "three-step") {
        ThreeStepResult r = three_step_rep(lie->algebra);
        meta["alpha"] = jsonio::scalar_to_json(r.params.alpha);
        meta["beta"] = jsonio::scalar_to_json(r.params.beta);
        meta["gamma"] = jsonio::scalar_to_json(r.params.gamma);
        meta["derivation"] = jsonio::matrix_to_json(r.params.derivation);
        return std::move(r.rep);
      }
      throw ParseError("unknown build kind '" + kind + "'");
    }();
    (void)seed;

    meta["delta"] = jsonio::scalar_to_json(etale_det(rep));
    ordered_json out = ordered_json::parse(emit_document(rep));
    out["meta"] = meta;
    return {0, out.dump(2)};
  });
}

namespace {

std::vector<Scalar> parse_axis(const std::string& spec) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : spec) {
    if (c == ':') {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  if (parts.size() != 3) throw ParseError("grid spec is min:max:count");
  Scalar lo(parse_rational(parts[0]));
  Scalar hi(parse_rational(parts[1]));
  long count = std::stol(parts[2]);
  if (count < 1) throw ParseError("grid count must be positive");
  std::vector<Scalar> values;
  if (count == 1) {
    values.push_back(lo);
    return values;
  }
  Scalar step = (hi - lo) / Scalar(count - 1);
  for (long i = 0; i < count; ++i) values.push_back(lo + Scalar(i) * step);
  return values;
}

/// Two-parameter family covering the commutative associative nilpotent
/// products on the plane: x o y = l(x) l(y) u with l = (s, t) and u the
/// 90-degree rotation (-t, s) of l, so l(u) = 0 holds by construction.
CAProduct plane_product(const Scalar& s, const Scalar& t) {
  CAProduct c(2);
  Vec u{Scalar(0) - t, s};
  auto ell = [&](const Scalar& x1, const Scalar& x2) { return s * x1 + t * x2; };
  c.set(0, 0, ell(Scalar(1), Scalar(0)) * ell(Scalar(1), Scalar(0)) * u);
  c.set(0, 1, ell(Scalar(1), Scalar(0)) * ell(Scalar(0), Scalar(1)) * u);
  c.set(1, 1, ell(Scalar(0), Scalar(1)) * ell(Scalar(0), Scalar(1)) * u);
  return c;
}

}  // namespace

CommandOutcome cmd_defspace(const std::string& input_text,
                            const DefspaceOptions& opts) {
  return run_guarded([&]() -> CommandOutcome {
    if (opts.grid.empty()) {
      Document doc = parse_document(input_text);
      CAProduct canonical = [&]() {
        if (const AffineRep* rep = std::get_if<AffineRep>(&doc.payload))
          return canonical_product(*rep);
        if (const CAProduct* ca = std::get_if<CAProduct>(&doc.payload))
          return canonical_product(rep_from_product(*ca));
        throw ParseError("defspace expects a rep or ca document");
      }();
      return {0, emit_document(canonical)};
    }

    if (opts.phi_json.empty())
      throw ParseError("grid scan needs --phi with an automorphism matrix");
    ordered_json phi_doc;
    try {
      phi_doc = ordered_json::parse(opts.phi_json);
    } catch (const std::exception& e) {
      throw ParseError(std::string("invalid --phi JSON: ") + e.what());
    }
    if (phi_doc.is_object()) phi_doc = phi_doc.at("phi");
    Matrix phi = jsonio::matrix_from_json(phi_doc, 0);
    if (phi.rows() != 2 || phi.cols() != 2)
      throw ParseError("grid scan is two-dimensional; --phi must be 2x2");

    std::vector<Scalar> axis = parse_axis(opts.grid);
    const std::size_t count = axis.size();
    std::vector<std::vector<bool>> fixed(count, std::vector<bool>(count));

    NonsingularSearch search;
    search.seed = opts.seed;
    auto scan_rows = [&](std::size_t begin, std::size_t end) {
      for (std::size_t si = begin; si < end; ++si)
        for (std::size_t ti = 0; ti < count; ++ti) {
          AffineRep rep = rep_from_product(plane_product(axis[si], axis[ti]));
          fixed[si][ti] =
              fixed_point_check(rep, phi, search).conjugator.has_value();
        }
    };
    int threads = std::max(1, opts.parallel);
    if (threads == 1 || count < 2) {
      scan_rows(0, count);
    } else {
      std::vector<std::thread> pool;
      std::size_t chunk = (count + threads - 1) / threads;
      for (std::size_t begin = 0; begin < count; begin += chunk)
        pool.emplace_back(scan_rows, begin, std::min(begin + chunk, count));
      for (auto& t : pool) t.join();
    }

    std::ostringstream csv;
    csv << "s,t,fixed\n";
    for (std::size_t si = 0; si < count; ++si)
      for (std::size_t ti = 0; ti < count; ++ti)
        csv << axis[si].str() << "," << axis[ti].str() << ","
            << (fixed[si][ti] ? "true" : "false") << "\n";
    return {0, csv.str()};
  });
}

CommandOutcome cmd_realize(const std::string& input_text, unsigned long seed) {
  return run_guarded([&]() -> CommandOutcome {
    Document doc = parse_document(input_text);
    const ExtensionDocument* ext = std::get_if<ExtensionDocument>(&doc.payload);
    if (!ext) throw ParseError("realize expects an ext document");
    const ExtensionSpec& spec = ext->spec;

    CrystVerdict base = is_crystallographic(spec.base);
    if (!base.crystallographic)
      throw InvariantError("base representation is not crystallographic");

    NonsingularSearch search;
    search.seed = seed;

    ordered_json out = verdict_header("realize");
    ordered_json autos = ordered_json::array();
    std::vector<AffineMap> conjugators;
    bool all_fixed = true;
    bool all_certified = true;
    for (const auto& a : spec.autos) {
      ConjugatorResult r = fixed_point_check(spec.base, a.phi, search);
      ordered_json entry;
      entry["order"] = a.order;
      entry["fixed_point"] = r.conjugator.has_value();
      entry["certified"] = r.conjugator.has_value() || r.exhaustive;
      if (r.conjugator) {
        entry["conjugator"] = jsonio::matrix_to_json(r.conjugator->matrix());
        conjugators.push_back(*r.conjugator);
      } else {
        all_fixed = false;
        all_certified = all_certified && r.exhaustive;
      }
      autos.push_back(std::move(entry));
    }

    bool relations_ok = false;
    ordered_json relations = ordered_json::array();
    if (all_fixed) {
      std::vector<AffineMap> lifts =
          ext->lifts ? *ext->lifts : construct_lifts(spec, conjugators);
      ExtensionResult result = build_split_extension(spec, lifts);
      relations_ok = result.all_ok;
      for (std::size_t j = 0; j < lifts.size(); ++j)
        autos[j]["lift"] = jsonio::matrix_to_json(lifts[j].matrix());
      for (const auto& rel : result.relations) {
        ordered_json r;
        r["word"] = rel.word;
        r["ok"] = rel.ok;
        if (!rel.ok) r["residual"] = jsonio::matrix_to_json(rel.residual);
        relations.push_back(std::move(r));
      }
    }

    bool realizable = all_fixed && relations_ok;
    out["realizable"] = realizable;
    out["verdict"] = realizable ? "realizable" : "not-certified";
    out["base_delta"] = jsonio::scalar_to_json(base.delta);
    out["autos"] = autos;
    out["relations"] = relations;
    return {0, out.dump(2)};
  });
}

}  // namespace affcryst
