// Census driver for relative commutativity, tensor and exterior degrees.
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tensordeg/catalog.hpp"
#include "tensordeg/census.hpp"
#include "tensordeg/errors.hpp"
#include "tensordeg/tensor.hpp"
#include "tensordeg/text_io.hpp"

namespace {

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const std::string& item : items) {
    std::stringstream ss(item);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

tdeg::GroupPtr load_group(const std::string& expr, const std::string& file) {
  if (!file.empty()) return tdeg::parse_group_file(file);
  return tdeg::catalog_group(expr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tensor, exterior and commutativity degree census over small finite groups"};
  app.require_subcommand(0, 1);

  std::vector<std::string> groups;
  std::vector<std::string> group_files;
  std::string pairs = "hk";
  std::string format = "csv";
  std::string output;
  tdeg::CensusConfig config;
  app.add_option("--groups", groups, "Catalog expressions, comma separated (default: built-in catalog)");
  app.add_option("--group-file", group_files, "Multiplication-table files to include")->check(CLI::ExistingFile);
  app.add_option("--max-order", config.max_order, "Skip groups above this order")->capture_default_str();
  app.add_option("--pairs", pairs, "Pair policy: diagonal|hk|all")->capture_default_str();
  app.add_option("--max-cosets", config.max_cosets, "Coset enumeration cap")->capture_default_str();
  app.add_option("--output", output, "Report path (default: stdout)");
  app.add_option("--format", format, "Report format: csv|json")->capture_default_str();
  app.add_option("--jobs", config.jobs, "Worker threads")->capture_default_str();

  auto* present = app.add_subcommand("present", "Print the tensor-square presentation of a group");
  std::string present_group = "S3";
  std::string present_file;
  present->add_option("--group", present_group, "Catalog expression")->capture_default_str();
  present->add_option("--group-file", present_file, "Multiplication-table file")->check(CLI::ExistingFile);

  auto* enumerate = app.add_subcommand("enumerate", "Coset-enumerate a presentation file");
  std::string pres_file;
  bool print_table = false;
  std::size_t enum_cap = tdeg::kDefaultMaxCosets;
  enumerate->add_option("file", pres_file, "Presentation file")->required()->check(CLI::ExistingFile);
  enumerate->add_option("--max-cosets", enum_cap, "Coset enumeration cap")->capture_default_str();
  enumerate->add_flag("--table", print_table, "Also print the multiplication table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*present) {
      const tdeg::GroupPtr g = load_group(present_group, present_file);
      const tdeg::Subgroup whole = tdeg::Subgroup::whole(g);
      std::cout << tdeg::format_presentation(tdeg::tensor_presentation(whole, whole).pres);
      return 0;
    }
    if (*enumerate) {
      const tdeg::Presentation p = tdeg::parse_presentation_file(pres_file);
      const tdeg::EnumeratedGroup eg = tdeg::todd_coxeter(p, enum_cap);
      const tdeg::Subgroup whole = tdeg::Subgroup::whole(eg.group);
      std::cout << "order " << eg.group->order() << "\n"
                << "classes " << tdeg::conjugacy_classes(whole, whole).count() << "\n";
      std::cout << "generators";
      for (tdeg::Elem x : eg.genmap) std::cout << ' ' << x;
      std::cout << "\n";
      if (print_table) std::cout << tdeg::format_group_text(*eg.group);
      return 0;
    }

    config.groups = split_list(groups);
    for (const auto& f : group_files) config.group_files.emplace_back(f);
    config.policy = tdeg::parse_pair_policy(pairs);
    config.format = tdeg::parse_output_format(format);
    if (!output.empty()) config.output = output;

    const tdeg::CensusResult result = tdeg::run_census(config);
    if (!config.output) {
      std::cout << (config.format == tdeg::OutputFormat::csv ? tdeg::format_csv(result.rows)
                                                             : tdeg::format_json(result));
      std::cerr << tdeg::format_summary(result.summary);
    } else {
      std::cout << tdeg::format_summary(result.summary);
    }
    return result.exit_status;
  } catch (const tdeg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
