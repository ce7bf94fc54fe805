#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cca/errors.hpp"
#include "cca/field.hpp"
#include "commands.hpp"
#include "pipelines.hpp"
#include "report.hpp"

namespace {

using cca::workbench::Report;

int emit(const Report& report, const std::string& format) {
  if (format == "json") {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << report.to_text();
  }
  return report.exit_code();
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
}

void add_field_option(CLI::App* cmd, std::string& field) {
  cmd->add_option("--field", field,
                  "Coefficient field: Q, Fp=<prime>, or F<prime>");
}

CLI::Option* add_file_option(CLI::App* cmd, std::string& path) {
  return cmd->add_option("--file", path, "Input file")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact-arithmetic workbench for monomial ideals, Groebner bases, and "
      "simplicial homology"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string field_text = "Q";
  std::string path;
  std::string fresh_name = "Z";
  cca::workbench::ExMainOptions ex_options;
  bool tamper = false;
  cca::workbench::SegreOptions segre_options;

  int exit_code = 0;
  auto run = [&](auto&& make_report) {
    exit_code = emit(make_report(), format);
  };

  CLI::App* verify = app.add_subcommand("verify", "Built-in verification pipelines");
  verify->require_subcommand(1);

  CLI::App* ex_main = verify->add_subcommand(
      "ex-main",
      "Run the eight-step verification of the built-in Segre cubic");
  add_format_option(ex_main, format);
  add_field_option(ex_main, field_text);
  ex_main->add_flag("--tamper", tamper)->group("");
  ex_main->callback([&] {
    run([&] {
      ex_options.field = cca::Field::parse(field_text);
      ex_options.tamper = tamper;
      return cca::workbench::cmd_verify_ex_main(ex_options);
    });
  });

  CLI::App* segre = verify->add_subcommand(
      "segre", "Randomized check of the Segre initial-ideal description");
  add_format_option(segre, format);
  segre->add_option("--seed", segre_options.seed, "Root seed")
      ->capture_default_str();
  segre->add_option("--trials", segre_options.trials, "Number of trials")
      ->capture_default_str();
  segre->add_option("--max-a", segre_options.max_a, "Largest row index")
      ->capture_default_str();
  segre->add_option("--max-b", segre_options.max_b, "Largest column index")
      ->capture_default_str();
  segre->callback([&] {
    run([&] { return cca::workbench::cmd_verify_segre(segre_options); });
  });

  CLI::App* quasi = app.add_subcommand(
      "quasi-check", "Height pattern of the k[(X,Y,Z)_3] power slice");
  add_format_option(quasi, format);
  quasi->callback([&] {
    run([&] { return cca::workbench::cmd_quasi_check(); });
  });

  CLI::App* homology = app.add_subcommand(
      "homology", "Reduced Betti numbers of a complex from a JSON file");
  add_format_option(homology, format);
  add_field_option(homology, field_text);
  add_file_option(homology, path);
  homology->callback([&] {
    run([&] {
      return cca::workbench::cmd_homology(path, cca::Field::parse(field_text));
    });
  });

  CLI::App* depth = app.add_subcommand(
      "depth", "Depth and Cohen-Macaulayness of a Stanley-Reisner ring");
  add_format_option(depth, format);
  add_field_option(depth, field_text);
  add_file_option(depth, path);
  depth->callback([&] {
    run([&] {
      return cca::workbench::cmd_depth(path, cca::Field::parse(field_text));
    });
  });

  CLI::App* nerve = app.add_subcommand(
      "nerve", "Nerve of the facet cover of a complex from a JSON file");
  add_format_option(nerve, format);
  add_file_option(nerve, path);
  nerve->callback([&] {
    run([&] { return cca::workbench::cmd_nerve(path); });
  });

  CLI::App* lyubeznik = app.add_subcommand(
      "lyubeznik", "Lyubeznik complex of a square-free monomial ideal");
  add_format_option(lyubeznik, format);
  add_field_option(lyubeznik, field_text);
  add_file_option(lyubeznik, path);
  lyubeznik->callback([&] {
    run([&] {
      return cca::workbench::cmd_lyubeznik(path, cca::Field::parse(field_text));
    });
  });

  CLI::App* groebner = app.add_subcommand(
      "groebner", "Reduced Groebner basis of an ideal file");
  add_format_option(groebner, format);
  add_file_option(groebner, path);
  groebner->callback([&] {
    run([&] { return cca::workbench::cmd_groebner(path); });
  });

  CLI::App* initial = app.add_subcommand(
      "initial", "Minimal generators of the initial ideal of an ideal file");
  add_format_option(initial, format);
  add_file_option(initial, path);
  initial->callback([&] {
    run([&] { return cca::workbench::cmd_initial(path); });
  });

  CLI::App* weight = app.add_subcommand(
      "weight", "Weight vector certifying the initial ideal of an ideal file");
  add_format_option(weight, format);
  add_file_option(weight, path);
  weight->callback([&] {
    run([&] { return cca::workbench::cmd_weight(path); });
  });

  CLI::App* homogenize = app.add_subcommand(
      "homogenize", "Weight homogenization of the reduced basis of an ideal");
  add_format_option(homogenize, format);
  add_file_option(homogenize, path);
  homogenize->add_option("--var", fresh_name, "Homogenizing variable name")
      ->capture_default_str();
  homogenize->callback([&] {
    run([&] { return cca::workbench::cmd_homogenize(path, fresh_name); });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int help_code = app.exit(e);
    return help_code == 0 ? 0 : 2;
  } catch (const cca::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
