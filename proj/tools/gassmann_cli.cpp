// gassmann: command-line front end. Exit codes: 0 pass, 1 mismatch or failed
// consistency check, 2 input or resource error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gassmann/homsearch.hpp"
#include "gassmann/pipeline/report.hpp"
#include "gassmann/pipeline/spec_io.hpp"
#include "gassmann/pipeline/verify.hpp"
#include "gassmann/regconst/regulator.hpp"

namespace {

using gassmann::io::Json;
namespace io = gassmann::io;

constexpr int exit_pass = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_input = 2;

void emit(const Json& j, const std::string& output) {
  if (output.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(output);
  if (!out) throw gassmann::InputError("cannot write " + output);
  out << j.dump(2) << '\n';
}

std::vector<mpz_class> primes_of(const Json& cfg) {
  std::vector<mpz_class> out;
  for (const auto& p : cfg.value("primes", Json::array())) out.emplace_back(p.get<long>());
  return out;
}

int cmd_validate_relation(const Json& cfg, const std::string& output) {
  return io::with_group(io::field(cfg, "group"), [&](const auto& g) {
    const auto rel = io::parse_relation(g, io::field(cfg, "relation"));
    const auto v = gassmann::validate_relation(rel);
    Json out = {{"relation", rel.to_string()},
                {"q_relation", v.is_q_relation},
                {"coeff_sum", v.coeff_sum},
                {"triv_constant", gassmann::relation_triv_constant(rel).get_str()}};
    if (rel.terms().size() == 2)
      out["gassmann"] = gassmann::gassmann_check(g, rel.terms()[0].subgroup, rel.terms()[1].subgroup).equivalent;
    emit(out, output);
    if (cfg.contains("expected") && cfg.at("expected").contains("q_relation"))
      return cfg.at("expected").at("q_relation").get<bool>() == v.is_q_relation ? exit_pass : exit_mismatch;
    return v.is_q_relation ? exit_pass : exit_mismatch;
  });
}

int cmd_regconst(const Json& cfg, const std::string& output, std::uint64_t seed, bool random_pairing) {
  return io::with_group(io::field(cfg, "group"), [&](const auto& g) {
    const auto rel = io::parse_relation(g, io::field(cfg, "relation"));
    gassmann::detail::require_input(gassmann::validate_relation(rel).is_q_relation,
                                    rel.to_string() + " is not a Q[G]-relation");
    std::vector<Json> reps;
    if (cfg.contains("reps")) {
      for (const auto& r : cfg.at("reps")) reps.push_back(r);
    } else {
      reps.push_back(io::field(cfg, "rep"));
    }
    Json results = Json::array();
    for (const auto& rj : reps) {
      const auto rep = io::parse_rep(g, rj);
      const auto form = gassmann::invariant_pairing(rep, seed, random_pairing);
      const auto rc = gassmann::regulator_constant(rel, rep, form);
      Json terms = Json::array();
      for (const auto& t : rc.terms)
        terms.push_back({{"subgroup", t.subgroup}, {"coeff", t.coeff}, {"fixed_dim", t.fixed_dim}, {"gram_det", t.gram_det.get_str()}});
      results.push_back({{"rep", rep.name()},
                         {"dim", rep.dim()},
                         {"value", rc.value.get_str()},
                         {"square_class", rc.square_class.to_string()},
                         {"terms", terms}});
    }
    emit({{"relation", rel.to_string()}, {"results", results}}, output);
    if (cfg.contains("expected")) {
      const auto& exp = cfg.at("expected");
      const auto want = exp.is_array() ? exp : Json::array({exp});
      for (std::size_t i = 0; i < want.size() && i < results.size(); ++i)
        if (want[i].get<std::string>() != results[i]["square_class"].get<std::string>()) return exit_mismatch;
    }
    return exit_pass;
  });
}

int cmd_homology(const Json& cfg, const std::string& output, const std::string& ring) {
  return io::with_group(io::field(cfg, "group"), [&](const auto& g) {
    auto pres = io::parse_presentation(io::field(cfg, "presentation"));
    const auto hom = io::parse_hom(pres, g, io::field(cfg, "hom"));
    Json subs = cfg.contains("subgroups") ? cfg.at("subgroups") : Json::array({cfg.value("subgroup", Json("G"))});
    Json results = Json::array();
    for (const auto& sj : subs) {
      const auto u = io::parse_subgroup(g, sj);
      const auto b = gassmann::boundary_matrices(hom, u);
      Json r = {{"subgroup", u.name()}, {"index", b.cosets}, {"d2", {b.d2.rows(), b.d2.cols()}}, {"d1", {b.d1.rows(), b.d1.cols()}}};
      if (ring == "Z") {
        const auto h1 = gassmann::homology_h1(b);
        Json factors = Json::array();
        for (const auto& d : h1.torsion) factors.push_back(io::integer_json(d));
        r["betti"] = h1.free_rank;
        r["invariant_factors"] = factors;
        r["homology"] = h1.to_string();
        r["h0"] = gassmann::homology_h0(b).to_string();
      } else {
        const std::int64_t p = ring == "Q" ? 0 : std::stoll(ring);
        gassmann::detail::require_input(p == 0 || gassmann::nt::is_prime(p), "ring must be Z, Q or a prime");
        r["ring"] = ring;
        r["dim"] = gassmann::homology_h1_dim(b, p);
      }
      results.push_back(r);
    }
    emit({{"surjective", hom.is_surjective()}, {"warnings", hom.presentation().warnings()}, {"results", results}}, output);
    return exit_pass;
  });
}

int cmd_screen(const Json& cfg, const std::string& output, std::int64_t prime, unsigned threads) {
  return io::with_group(io::field(cfg, "group"), [&](const auto& g) {
    using M = std::decay_t<decltype(g.model())>;
    auto pres = io::parse_presentation(io::field(cfg, "presentation"));
    const auto rel = io::parse_relation(g, io::field(cfg, "relation"));
    std::vector<gassmann::GroupHom<M>> homs;
    if (cfg.contains("homs")) {
      for (const auto& hj : cfg.at("homs")) homs.push_back(io::parse_hom(pres, g, hj));
    } else if (cfg.contains("hom")) {
      homs.push_back(io::parse_hom(pres, g, cfg.at("hom")));
    } else {
      gassmann::HomSearchTask<M> task{pres, g};
      task.threads = threads;
      if (!gassmann::abelian_prefilter(*pres, g)) {
        emit({{"prefilter", false}, {"results", Json::array()}}, output);
        return exit_pass;
      }
      homs = gassmann::enumerate_homs(task);
    }
    const auto rows = gassmann::screen(homs, rel, prime, threads);
    Json out = {{"relation", rel.to_string()}, {"homs", homs.size()}, {"results", gassmann::screen_json(rows, prime)}};
    Json flagged = Json::array();
    for (const auto& r : rows)
      if (r.flagged) flagged.push_back(io::hom_json(homs[r.hom]));
    out["flagged"] = flagged;
    emit(out, output);
    return exit_pass;
  });
}

int cmd_report(const Json& cfg, const std::string& output, const std::string& parity_reference) {
  return io::with_group(io::field(cfg, "group"), [&](const auto& g) {
    using M = std::decay_t<decltype(g.model())>;
    auto pres = io::parse_presentation(io::field(cfg, "presentation"));
    const auto hom = io::parse_hom(pres, g, io::field(cfg, "hom"));
    const auto rel = io::parse_relation(g, cfg.value("relation", Json::array()));
    std::optional<gassmann::Subgroup<M>> reference;
    const std::string ref = parity_reference.empty() ? cfg.value("parity_reference", std::string{}) : parity_reference;
    if (!ref.empty()) reference = io::parse_subgroup(g, Json(ref));
    const auto report = gassmann::run_report(hom, rel, primes_of(cfg), reference);
    emit(gassmann::report_json(report), output);
    return report.parity && !report.parity->consistent ? exit_mismatch : exit_pass;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gassmann relations, regulator constants and torsion homology of covers"};
  app.require_subcommand(1);
  std::string config, output, fixtures = "fixtures", ring = "Z", parity_reference;
  std::int64_t prime = 2;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  bool random_pairing = false;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("-c,--config", config, "JSON input")->required()->check(CLI::ExistingFile);
    sub->add_option("-o,--output", output, "write JSON here instead of stdout");
  };
  auto* validate = app.add_subcommand("validate-relation", "check that a relation is a Q[G]-relation");
  add_io(validate);
  auto* regconst = app.add_subcommand("regconst", "regulator constants of representations modulo squares");
  add_io(regconst);
  regconst->add_option("--seed", seed, "seed for the random invariant pairing");
  regconst->add_flag("--random-pairing", random_pairing, "use a random invariant pairing even for orthogonal reps");
  auto* homology = app.add_subcommand("homology", "H_1 of intermediate covers");
  add_io(homology);
  homology->add_option("--ring", ring, "Z, Q, or a prime p");
  auto* screen = app.add_subcommand("screen", "F_p screening of homomorphisms across a relation");
  add_io(screen);
  screen->add_option("-p,--prime", prime, "screening prime")->required();
  screen->add_option("-t,--threads", threads, "parallel width")->check(CLI::Range(1u, 256u));
  auto* report = app.add_subcommand("report", "torsion comparison report across a relation");
  add_io(report);
  report->add_option("--parity-reference", parity_reference, "subgroup for the Betti parity check, e.g. B");
  auto* verify = app.add_subcommand("verify-paper", "run all fixture checks and print a table");
  verify->add_option("-f,--fixtures", fixtures, "fixture directory")->check(CLI::ExistingDirectory);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*verify) {
      const auto summary = gassmann::verify_paper(fixtures);
      gassmann::print_summary(std::cout, summary);
      const auto failed = std::count_if(summary.checks.begin(), summary.checks.end(), [](const auto& c) { return !c.passed; });
      std::cout << summary.checks.size() - static_cast<std::size_t>(failed) << "/" << summary.checks.size() << " checks passed\n";
      return summary.all_passed() ? exit_pass : exit_mismatch;
    }
    const Json cfg = io::read_json(config);
    if (*validate) return cmd_validate_relation(cfg, output);
    if (*regconst) return cmd_regconst(cfg, output, seed, random_pairing);
    if (*homology) return cmd_homology(cfg, output, ring);
    if (*screen) return cmd_screen(cfg, output, prime, threads);
    if (*report) return cmd_report(cfg, output, parity_reference);
  } catch (const gassmann::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return exit_input;
  } catch (const gassmann::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return exit_input;
  } catch (const gassmann::InternalError& e) {
    std::cerr << "consistency check failed: " << e.what() << '\n';
    return exit_mismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}
