#include "cli.hpp"

#include "octodp/acceptance.hpp"
#include "octodp/catalog.hpp"
#include "octodp/discriminant.hpp"
#include "octodp/error.hpp"
#include "octodp/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

namespace octodp::cli {

namespace {

ModuliVector resolve_moduli(const RunConfig& config) {
  if (!config.moduli) throw PreconditionError("this command needs moduli (-d d1,...,d6)");
  for (const auto& e : reference_catalog())
    if (e.name == *config.moduli) return ModuliVector(e.moduli);
  return ModuliVector::from_string(*config.moduli);
}

void require_format(const RunConfig& config, std::initializer_list<Format> allowed) {
  for (Format f : allowed)
    if (f == config.format) return;
  throw PreconditionError("output format not supported by this command");
}

std::string dispatch(const RunConfig& config, std::ostream& err, bool& all_passed) {
  switch (config.command) {
    case Command::Build: {
      require_format(config, {Format::Json});
      const auto d = resolve_moduli(config);
      Json report = build_report(d);
      if (config.delta_file) {
        const auto delta = load_a_discriminant(*config.delta_file);
        report["discriminant"]["value"] = to_json(full_discriminant(coefficients_from_moduli(d), delta).full_discriminant);
      }
      return report.dump(2) + "\n";
    }
    case Command::Classify: {
      require_format(config, {Format::Json});
      const auto c = classify_moduli(resolve_moduli(config), Prime(config.prime));
      return classification_report(c).dump(2) + "\n";
    }
    case Command::Lines: {
      require_format(config, {Format::Json, Format::Dot});
      const auto census = full_census(resolve_moduli(config));
      if (config.format == Format::Dot) return schlafli_dot(census);
      return census_report(census).dump(2) + "\n";
    }
    case Command::Trees: {
      require_format(config, {Format::Json, Format::Newick});
      const auto c = classify_moduli(resolve_moduli(config), Prime(config.prime));
      if (config.format == Format::Newick) return arrangement_newick(c.arrangement, c.census);
      return classification_report(c, true).dump(2) + "\n";
    }
    case Command::Triangulations:
      require_format(config, {Format::Json});
      return triangulation_census_report().dump(2) + "\n";
    case Command::Sample: {
      require_format(config, {Format::Json});
      const Prime p(config.prime);
      SearchStats stats;
      const auto findings = search(SearchTarget::parse(config.target), config.budget, config.seed, p,
                                   config.threads, &stats);
      std::string out;
      for (const auto& f : findings) out += finding_report(f).dump() + "\n";
      err << findings.size() << " findings in " << stats.draws << " draws (" << stats.inadmissible
          << " inadmissible)\n";
      return out;
    }
    case Command::Blowdown: {
      require_format(config, {Format::Json});
      const auto r = roundtrip_check(resolve_moduli(config));
      all_passed = r.ok();
      return roundtrip_report(r).dump(2) + "\n";
    }
    case Command::Verify: {
      require_format(config, {Format::Json});
      AcceptanceOptions opt;
      opt.seed = config.seed;
      opt.threads = config.threads;
      opt.only.insert(config.only.begin(), config.only.end());
      if (config.delta_file) opt.delta = load_a_discriminant(*config.delta_file);
      opt.on_result = [&err](const CriterionResult& r) { err << format_result(r) << "\n"; };
      const auto results = run_acceptance(opt);
      Json summary;
      Json list = Json::array();
      int passed = 0;
      for (const auto& r : results) {
        passed += r.pass;
        list.push_back({{"id", r.id},
                        {"name", r.name},
                        {"pass", r.pass},
                        {"tolerance", r.tolerance},
                        {"seconds", r.seconds},
                        {"detail", r.detail}});
      }
      summary["passed"] = passed;
      summary["total"] = results.size();
      summary["criteria"] = list;
      all_passed = passed == static_cast<int>(results.size());
      return summary.dump(2) + "\n";
    }
  }
  throw InvariantError("unknown command");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Prime{config.prime};  // validates
    bool all_passed = true;
    const std::string text = dispatch(config, err, all_passed);
    if (config.output == "-") {
      out << text;
    } else {
      std::ofstream file(config.output, std::ios::binary);
      if (!file) throw PreconditionError("cannot write " + config.output);
      file << text;
    }
    return all_passed ? 0 : 1;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"octanomial cubic surfaces over Q: lines, tropicalization and tree arrangements"};
  app.require_subcommand(1);
  RunConfig config;

  const std::map<std::string, Format> formats = {{"json", Format::Json}, {"newick", Format::Newick}, {"dot", Format::Dot}};
  auto add_common = [&](CLI::App* sub, bool moduli, bool prime) {
    if (moduli) {
      sub->add_option("-d,--moduli", config.moduli, "d1,...,d6 as integers or n/m, or a catalog name")
          ->required()
          ->allow_extra_args(false);
    }
    if (prime) sub->add_option("-p,--prime", config.prime, "prime p >= 5")->capture_default_str();
    sub->add_option("-o,--output", config.output, "output path, - for stdout")->capture_default_str();
    sub->add_option("--format", config.format, "json, newick or dot")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  struct Sub {
    const char* name;
    const char* help;
    Command command;
    bool moduli, prime;
  };
  const Sub subs[] = {
      {"build", "coefficients, cubic and discriminant of the surface", Command::Build, true, false},
      {"classify", "tropical smoothness, tree statistic and arrangement type", Command::Classify, true, true},
      {"lines", "the 27 lines and 135 intersection points", Command::Lines, true, false},
      {"trees", "the 27 phylogenetic trees", Command::Trees, true, true},
      {"triangulations", "regular triangulations of the support", Command::Triangulations, false, false},
      {"sample", "Bergman-fan sampling of moduli", Command::Sample, false, true},
      {"blowdown", "blow-down round trip back to six plane points", Command::Blowdown, true, false},
      {"verify", "run the acceptance battery", Command::Verify, false, false},
  };
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, s.moduli, s.prime);
    const Command command = s.command;
    sub->callback([&config, command] { config.command = command; });
    if (command == Command::Sample) {
      sub->add_option("--target", config.target, "aaaa, aaab, aab, aaa, other-stable, non-stable-unknown, smooth, class=K, any")
          ->capture_default_str();
      sub->add_option("--budget", config.budget, "number of draws")->capture_default_str();
      sub->add_option("--seed", config.seed, "seed of the draw stream")->capture_default_str();
      sub->add_option("--threads", config.threads, "worker count, 0 reads OCTODP_THREADS");
    }
    if (command == Command::Verify) {
      sub->add_option("--seed", config.seed, "seed for the random samples")->capture_default_str();
      sub->add_option("--delta-file", config.delta_file, "replacement A-discriminant data file");
      sub->add_option("--only", config.only, "run only these criteria");
      sub->add_option("--threads", config.threads, "worker count, 0 reads OCTODP_THREADS");
    }
    if (command == Command::Build) {
      sub->add_option("--delta-file", config.delta_file, "replacement A-discriminant data file");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }
  return run(config, out, err);
}

}  // namespace octodp::cli
