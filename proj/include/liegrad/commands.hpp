#pragma once

#include <iosfwd>

#include "json.hpp"
#include "liegrad/reference.hpp"

namespace liegrad {

enum class Format { Table, Json, Csv };

// Every command produces one envelope; serializations are deterministic
// (identical inputs give byte-identical output in all three formats).
struct Envelope {
  std::string command;
  nlohmann::ordered_json inputs;
  nlohmann::ordered_json results;
  std::vector<reference::Erratum> errata;
};

Envelope cmd_roots(const std::string& type_str);
Envelope cmd_gradings(const std::string& type_str, int k, bool dedupe);
Envelope cmd_dims(const std::string& type_str, const std::string& sigma_csv, int k);
Envelope cmd_levi(const std::string& type_str, const std::string& sigma_csv);
Envelope cmd_free(const std::string& type_str, int k, const std::string& sigma_csv);
Envelope cmd_scan(const std::string& families, int max_rank, int k);
Envelope cmd_tables();

std::string render(const Envelope& e, Format f);

// Full CLI: parses args (without argv[0]), writes the rendered envelope to out,
// diagnostics to err. Returns 0 on success, 2 on input errors, 3 on internal
// consistency failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liegrad
