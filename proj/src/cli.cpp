#include "qnull/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <type_traits>

#include "qnull/central.hpp"
#include "qnull/ideal.hpp"
#include "qnull/json_io.hpp"
#include "qnull/msphere.hpp"
#include "qnull/parse.hpp"
#include "qnull/qform.hpp"
#include "qnull/verify.hpp"

namespace qnull {

namespace {

struct Options {
  std::string command;
  std::string algebra = "-1,-1";
  std::string field = "rat";
  std::uint64_t seed = 1;
  bool json = false;
  std::string poly;
  std::string point;
  int members = 1000;
};

template <class S>
AlgebraPtr<S> parse_algebra(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw Error("--algebra expects 'a,b'");
  S a = parse_quaternion<S>(text.substr(0, comma)).real_part();
  S b = parse_quaternion<S>(text.substr(comma + 1)).real_part();
  return AlgebraSpec<S>::make(a, b);
}

Json envelope(const std::string& command, Json result) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["result"] = std::move(result);
  return j;
}

int emit_report(const Options& opt, const Report& rep, std::ostream& out) {
  if (opt.json) {
    out << rep.to_json().dump(2) << "\n";
  } else {
    out << rep.to_text();
  }
  return rep.pass() ? kExitOk : kExitCheckFailed;
}

template <class S>
int execute(const Options& opt, std::ostream& out) {
  auto alg = parse_algebra<S>(opt.algebra);
  const bool hamilton = *alg == *AlgebraSpec<S>::hamilton();
  // Quaternions are created with the selected algebra; Hamilton keeps the default.
  AlgebraPtr<S> qalg = hamilton ? nullptr : alg;

  auto point = [&] { return parse_point<S>(opt.point, qalg); };
  auto poly_for = [&](const QTuple<S>& v) { return parse_poly<S>(opt.poly, static_cast<int>(v.size()), qalg); };

  if (opt.command == "eval") {
    auto v = point();
    auto value = poly_for(v).eval(v);
    if (opt.json) {
      out << envelope("eval", Json{{"value", value.to_string()}, {"coords", quaternion_json(value)}}).dump(2) << "\n";
    } else {
      out << value.to_string() << "\n";
    }
    return kExitOk;
  }
  if (opt.command == "verify counterexample") {
    throw Unsupported("verify counterexample runs over Q(al,be,t); use the default --field");
  }

  if constexpr (std::is_same_v<S, RatFunc>) {
    throw Unsupported("command '" + opt.command + "' needs --field rat or f64");
  } else {
    if (!hamilton) throw Unsupported("central geometry commands require the Hamilton algebra -1,-1");
    auto v = point();

    if (opt.command == "present") {
      auto cp = central_presentation(v);
      if (opt.json) {
        out << envelope("present", presentation_json(cp)).dump(2) << "\n";
      } else {
        out << "v0 = " << tuple_to_string(cp.v0) << "\nblocks = [";
        for (std::size_t i = 0; i < cp.blocks.size(); ++i) out << (i ? ", " : "") << tuple_to_string(cp.blocks[i]);
        out << "]\nr = " << cp.r() << "\n";
      }
      return kExitOk;
    }
    if (opt.command == "blowup") {
      auto ms = blow_up(v);
      if (opt.json) {
        out << envelope("blowup", msphere_json(ms)).dump(2) << "\n";
      } else {
        out << "v0 = " << tuple_to_string(ms.v0) << "\n";
        for (std::size_t i = 0; i < ms.blocks.size(); ++i) {
          const auto& b = ms.blocks[i];
          out << "block " << i + 1 << ": A = " << scalars_json(b.A).dump() << ", lambda = " << scalars_json(b.lambda).dump()
              << ", rho = " << to_string(b.rho) << ", witness = " << b.witness.to_string() << "\n";
        }
      }
      return kExitOk;
    }
    if (opt.command == "restrict" || opt.command == "vanish") {
      auto ms = blow_up(v);
      auto q = restrict_poly(poly_for(v), ms);
      if (opt.command == "vanish") {
        if (opt.json) {
          out << envelope("vanish", Json{{"vanishes", q.is_zero()}}).dump(2) << "\n";
        } else {
          out << (q.is_zero() ? "true" : "false") << "\n";
        }
      } else if (opt.json) {
        out << envelope("restrict", multiaffine_json(q)).dump(2) << "\n";
      } else {
        out << q.to_string() << "\n";
      }
      return kExitOk;
    }
    if (opt.command == "cut-ideal") {
      auto gens = cutting_generators(blow_up(v));
      if (opt.json) {
        out << envelope("cut-ideal", generators_json(gens)).dump(2) << "\n";
      } else {
        for (const auto& g : gens) out << "[" << generator_kind_name(g.kind) << "] " << g.poly.to_string() << "\n";
      }
      return kExitOk;
    }
    if (opt.command == "grid") {
      auto grid = q_grid(v);
      if (opt.json) {
        Json pts = Json::array();
        for (const auto& p : grid.points) pts.push_back(tuple_json(p));
        out << envelope("grid", Json{{"r", grid.source.r()}, {"points", pts}}).dump(2) << "\n";
      } else {
        for (const auto& p : grid.points) out << tuple_to_string(p) << "\n";
      }
      return kExitOk;
    }
    if (opt.command == "verify blowup") return emit_report(opt, verify_blowup_theorem(v, opt.seed), out);
    if (opt.command == "verify cut") {
      auto ms = blow_up(v);
      return emit_report(opt, verify_cut(ms, cutting_generators(ms), opt.seed), out);
    }
    if (opt.command == "verify central-zeros") return emit_report(opt, verify_central_zeros(poly_for(v), v, opt.seed), out);
  }
  throw Error("unknown command '" + opt.command + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact quaternionic polynomial zero-set toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--algebra", opt.algebra, "Structure constants a,b of (a,b)_F")->capture_default_str();
  app.add_option("--field", opt.field, "Scalar field")->check(CLI::IsMember({"rat", "f64", "func"}))->capture_default_str();
  app.add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  app.add_flag("--json", opt.json, "Emit JSON");

  auto add_point_cmd = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* sub = parent->add_subcommand(name, help);
    sub->add_option("point", opt.point, "Point, e.g. \"(I,1,J)\"")->required();
    return sub;
  };
  auto add_poly_cmd = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* sub = parent->add_subcommand(name, help);
    sub->add_option("poly", opt.poly, "Polynomial expression")->required();
    sub->add_option("--at", opt.point, "Point, e.g. \"(I,J)\"")->required();
    return sub;
  };

  add_poly_cmd(&app, "eval", "Evaluate a polynomial at a point");
  add_point_cmd(&app, "present", "Central presentation of a point");
  add_point_cmd(&app, "blowup", "Blow-up multisphere of a point");
  add_poly_cmd(&app, "restrict", "Multi-affine restriction to the blow-up of --at");
  add_poly_cmd(&app, "vanish", "Decide vanishing on the blow-up of --at");
  add_point_cmd(&app, "cut-ideal", "Generators cutting out the blow-up");
  add_point_cmd(&app, "grid", "Central 2^r grid inside the blow-up");
  auto* verify = app.add_subcommand("verify", "Verification harnesses");
  verify->require_subcommand(1);
  add_point_cmd(verify, "blowup", "Members of the cutting ideal vanish on B(v)");
  add_poly_cmd(verify, "central-zeros", "Central grid pipeline for f at v");
  add_point_cmd(verify, "cut", "Generator system cuts out B(v)");
  auto* cex = verify->add_subcommand("counterexample", "Quaternion algebra over Q(al,be,t) without central zeros");
  cex->add_option("--members", opt.members, "Sampled ideal members")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  for (auto* sub : app.get_subcommands()) {
    opt.command = sub->get_name();
    for (auto* inner : sub->get_subcommands()) opt.command += " " + inner->get_name();
  }

  try {
    if (opt.command == "verify counterexample") {
      if (opt.field != "rat" && opt.field != "func") throw Unsupported("counterexample is exact over Q(al,be,t)");
      return emit_report(opt, verify_counterexample(opt.seed, opt.members), out);
    }
    if (opt.field == "f64") return execute<double>(opt, out);
    if (opt.field == "func") return execute<RatFunc>(opt, out);
    return execute<Rat>(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace qnull
