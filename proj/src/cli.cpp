#include "nodal/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nodal/classify.hpp"
#include "nodal/enumerate.hpp"
#include "nodal/errors.hpp"
#include "nodal/io.hpp"
#include "nodal/selftest.hpp"

namespace nodal {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

NodalDatum load(const std::string& path) {
  try {
    return parse_datum(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ":" + e.what());
  }
}

std::string dims_string(const std::vector<std::size_t>& dims) {
  std::string s = "(";
  for (std::size_t k = 0; k < dims.size(); ++k) s += (k ? "," : "") + std::to_string(dims[k]);
  return s + ")";
}

std::size_t budget_from_env() {
  if (const char* env = std::getenv("NODAL_ENUM_BUDGET")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      throw InputError(std::string("NODAL_ENUM_BUDGET is not a number: ") + env);
    }
  }
  return kDefaultEnumerationBudget;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nodal algebras of type A: presentations, representation type, enumeration", "nodalq"};
  app.require_subcommand(1);

  std::string file;
  auto* check = app.add_subcommand("check", "validate a datum file");
  check->add_option("file", file, "datum file")->required();

  std::string format = "text";
  auto* present = app.add_subcommand("present", "print the presentation of the nodal algebra");
  present->add_option("file", file, "datum file")->required();
  present->add_option("--format", format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));

  auto* classify_cmd = app.add_subcommand("classify", "decide the representation type");
  classify_cmd->add_option("file", file, "datum file")->required();

  std::size_t cap = kDefaultPathLengthCap;
  auto* dimension_cmd = app.add_subcommand("dimension", "dimension of the algebra over the ground field");
  dimension_cmd->add_option("file", file, "datum file")->required();
  dimension_cmd->add_option("--cap", cap, "longest nonzero path allowed");

  unsigned field_p = 2;
  std::size_t max_dim = 2;
  std::size_t budget = 0;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list indecomposable representations up to isomorphism");
  enumerate_cmd->add_option("file", file, "datum file")->required();
  enumerate_cmd->add_option("--field", field_p, "prime field size")->check(CLI::IsMember({2u, 3u, 5u, 7u}));
  enumerate_cmd->add_option("--max-dim", max_dim, "largest total dimension");
  auto* budget_opt = enumerate_cmd->add_option("--budget", budget, "free matrix entries per dimension vector");

  std::size_t trials = 200;
  std::uint64_t seed = 1;
  auto* selftest = app.add_subcommand("functors-selftest", "randomized checks of the gluing and blow-up functors");
  selftest->add_option("--trials", trials, "number of trials");
  selftest->add_option("--seed", seed, "random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInvalidInput;
  }

  try {
    if (check->parsed()) {
      const auto d = load(file);
      const auto report = validate(d);
      if (!report.ok()) {
        for (const auto& v : report.violations) err << "invalid: " << v.message << "\n";
        return kExitInvalidInput;
      }
      out << "ok: " << d.base.vertex_count() << " vertices, " << d.base.arrow_count() << " arrows, "
          << d.glue_pairs.size() << " glue pairs, " << d.blow_vertices.size() << " blow-ups\n";
    } else if (present->parsed()) {
      const auto built = build_presentation(load(file));
      const auto fmt = format == "json" ? OutputFormat::Json : format == "dot" ? OutputFormat::Dot : OutputFormat::Text;
      out << emit_presentation(built.presentation, fmt, &built.vertex_map);
    } else if (classify_cmd->parsed()) {
      const auto result = classify(load(file));
      out << verdict_name(result.verdict) << "\n";
      for (const auto& line : result.trace) out << "  " << line << "\n";
    } else if (dimension_cmd->parsed()) {
      const auto built = build_presentation(load(file));
      out << dimension(built.presentation, cap) << "\n";
    } else if (enumerate_cmd->parsed()) {
      if (budget_opt->count() == 0) budget = budget_from_env();
      const auto built = build_presentation(load(file));
      auto pres = std::make_shared<const Presentation>(built.presentation);
      const auto field = Field::prime(field_p);
      const auto result = enumerate_indecomposables(pres, field, max_dim, budget);
      out << result.classes.size() << " classes over " << field.name() << " up to total dimension " << max_dim
          << "\n";
      out << "vertices:";
      for (const auto& v : pres->quiver().vertices()) out << " " << v;
      out << "\n";
      for (std::size_t k = 0; k < result.classes.size(); ++k) {
        const auto& c = result.classes[k];
        out << std::setw(4) << k + 1 << "  dim " << dims_string(c.representative.dims()) << "  tuples "
            << c.count << "\n";
      }
    } else if (selftest->parsed()) {
      const auto report = functor_selftest(trials, seed);
      for (const auto& f : report.failures) err << "FAIL " << f << "\n";
      out << report.trials << " trials, " << report.checks << " checks, " << report.failures.size()
          << " failures\n";
      return report.ok() ? kExitOk : kExitInvalidInput;
    }
  } catch (const NotTypeA& e) {
    err << "error: " << e.what() << "\n";
    return kExitNotTypeA;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}

}  // namespace nodal
