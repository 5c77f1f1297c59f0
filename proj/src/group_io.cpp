#include "triangle_words/group_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "triangle_words/error.hpp"

namespace triangle_words {

namespace {

using nlohmann::json;

std::shared_ptr<const FiniteGroup> from_permutations(const json& doc, std::size_t cap) {
  const auto& list = doc.at("permutations");
  if (!list.is_array()) fail(ErrorCode::parse_error, "\"permutations\" must be an array");

  std::size_t degree = 0;
  bool degree_given = false;
  if (doc.contains("degree")) {
    const auto& d = doc.at("degree");
    if (!d.is_number_integer() || d.get<std::int64_t>() < 0) {
      fail(ErrorCode::parse_error, "\"degree\" must be a nonnegative integer");
    }
    degree = d.get<std::size_t>();
    degree_given = true;
  }

  std::vector<Permutation> gens;
  for (const auto& entry : list) {
    if (entry.is_string()) {
      gens.push_back(Permutation::from_cycles(entry.get<std::string>(), degree));
    } else if (entry.is_array()) {
      std::vector<std::int64_t> images;
      for (const auto& v : entry) {
        if (!v.is_number_integer()) fail(ErrorCode::parse_error, "image lists hold integers");
        images.push_back(v.get<std::int64_t>());
      }
      if (degree_given && images.size() != degree) {
        fail(ErrorCode::parse_error, "image list of length " + std::to_string(images.size()) +
                                         " does not match degree " + std::to_string(degree));
      }
      gens.push_back(Permutation::from_one_based(images));
    } else {
      fail(ErrorCode::parse_error, "permutations are image lists or cycle strings");
    }
  }
  if (degree_given) {
    for (auto& g : gens) g = g.extended(degree);
  }
  return enumerate_group(gens, cap);
}

std::shared_ptr<const FiniteGroup> from_table(const json& doc, std::size_t cap) {
  const auto& rows = doc.at("table");
  if (!rows.is_array()) fail(ErrorCode::parse_error, "\"table\" must be an array of rows");
  if (rows.size() > cap) {
    fail(ErrorCode::too_large, "group order exceeds the cap of " + std::to_string(cap));
  }
  std::vector<std::vector<std::int64_t>> table;
  for (const auto& row : rows) {
    if (!row.is_array()) fail(ErrorCode::parse_error, "table rows must be arrays");
    auto& out = table.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number_integer()) fail(ErrorCode::parse_error, "table entries are integers");
      out.push_back(v.get<std::int64_t>());
    }
  }
  return FiniteGroup::from_table(table);
}

}  // namespace

std::shared_ptr<const FiniteGroup> parse_group_json(const std::string& text, std::size_t cap) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::parse_error, "group description must be a JSON object");
  const bool has_perms = doc.contains("permutations");
  const bool has_table = doc.contains("table");
  if (has_perms == has_table) {
    fail(ErrorCode::parse_error, "expected exactly one of \"permutations\" or \"table\"");
  }
  return has_perms ? from_permutations(doc, cap) : from_table(doc, cap);
}

std::shared_ptr<const FiniteGroup> load_group_file(const std::string& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse_error, "cannot open group file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_group_json(buffer.str(), cap);
}

}  // namespace triangle_words
