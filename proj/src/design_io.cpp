#include "sodforge/design_io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace sodforge {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

template <class T>
T parse_number(std::string_view s, const char* what) {
  s = trim(s);
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(std::string("malformed ") + what + " '" + std::string(s) + "'");
  return value;
}

}  // namespace

std::string format_entry(const GroupPresentation& group, const Entry& e) {
  if (e.is_zero()) return "0";
  std::string out = e.element().sign > 0 ? "+" : "-";
  const std::string word = group.format_word(e.element().mask);
  if (!word.empty()) out += word + "*";
  return out + "x" + std::to_string(e.var() + 1);
}

Entry parse_entry(const GroupPresentation& group, std::string_view token) {
  token = trim(token);
  if (token == "0") return Entry::zero();
  const std::size_t x = token.rfind('x');
  if (x == std::string_view::npos) throw Error("design entry without variable: '" + std::string(token) + "'");
  const auto var = parse_number<VarIndex>(token.substr(x + 1), "variable index");
  if (var == 0) throw Error("variables are 1-indexed: '" + std::string(token) + "'");
  std::string_view head = token.substr(0, x);
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);
  int sign = 1;
  if (!head.empty() && (head.front() == '+' || head.front() == '-')) {
    sign = head.front() == '-' ? -1 : 1;
    head.remove_prefix(1);
  }
  GroupElement g = head.empty() ? GroupElement::identity() : group.parse(head);
  if (sign < 0) g = g.negated();
  return Entry::term(g, var - 1);
}

void write_design_header(std::ostream& os, std::size_t order, const GroupPresentation& group,
                         std::span<const std::int64_t> type) {
  os << "order " << order << "; vars " << type.size() << "; group " << group.name() << "; type ";
  for (std::size_t i = 0; i < type.size(); ++i) os << (i ? "," : "") << type[i];
  os << '\n';
}

void write_design_row(std::ostream& os, const GroupPresentation& group, std::span<const Entry> row) {
  std::string line;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (c) line += ',';
    line += format_entry(group, row[c]);
  }
  line += '\n';
  os << line;
}

void write_design_text(std::ostream& os, const DesignMatrix& x) {
  write_design_header(os, x.order(), x.group(), x.type());
  for (std::size_t r = 0; r < x.order(); ++r) write_design_row(os, x.group(), x.row(r));
}

void write_design_json(std::ostream& os, const DesignMatrix& x) {
  nlohmann::ordered_json j;
  j["order"] = x.order();
  j["vars"] = x.var_count();
  j["group"] = {{"name", x.group().name()},
                {"generator_count", x.group().generator_count()},
                {"square_signs", x.group().square_signs()}};
  j["type"] = x.type();
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < x.order(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (const Entry& e : x.row(r)) row.push_back(format_entry(x.group(), e));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  os << j.dump() << '\n';
}

DesignMatrix read_design_text(std::istream& is) {
  std::string line;
  do {
    if (!std::getline(is, line)) throw Error("design file: missing header");
  } while (trim(line).empty());

  std::size_t order = 0, vars = 0;
  std::string group_name;
  std::vector<std::int64_t> type;
  bool seen_order = false, seen_vars = false, seen_type = false;
  for (std::string_view field : split(line, ';')) {
    const std::size_t space = field.find(' ');
    const std::string_view key = field.substr(0, space);
    const std::string_view value = space == std::string_view::npos ? "" : trim(field.substr(space + 1));
    if (key == "order") {
      order = parse_number<std::size_t>(value, "order");
      seen_order = true;
    } else if (key == "vars") {
      vars = parse_number<std::size_t>(value, "variable count");
      seen_vars = true;
    } else if (key == "group") {
      group_name = std::string(value);
    } else if (key == "type") {
      if (!value.empty())
        for (auto tok : split(value, ',')) type.push_back(parse_number<std::int64_t>(tok, "type entry"));
      seen_type = true;
    } else {
      throw Error("design header: unknown field '" + std::string(key) + "'");
    }
  }
  if (!seen_order || !seen_vars || !seen_type || group_name.empty())
    throw Error("design header must give order, vars, group and type");
  if (type.size() != vars) throw Error("design header: type length differs from vars");

  DesignMatrix x(order, GroupPresentation::by_name(group_name), std::move(type));
  for (std::size_t r = 0; r < order; ++r) {
    if (!std::getline(is, line)) throw Error("design file: expected " + std::to_string(order) + " rows");
    const auto tokens = split(line, ',');
    if (tokens.size() != order) throw Error("design file: row " + std::to_string(r + 1) + " has wrong length");
    for (std::size_t c = 0; c < order; ++c) x.set(r, c, parse_entry(x.group(), tokens[c]));
  }
  return x;
}

DesignMatrix read_design_json(std::istream& is) {
  nlohmann::json j;
  try {
    is >> j;
    const auto& g = j.at("group");
    GroupPresentation group;
    if (g.is_string()) {
      group = GroupPresentation::by_name(g.get<std::string>());
    } else {
      group = GroupPresentation(g.at("name").get<std::string>(), g.at("square_signs").get<std::vector<int>>());
      if (g.contains("generator_count") && g.at("generator_count").get<std::size_t>() != group.generator_count())
        throw Error("design JSON: generator_count disagrees with square_signs");
    }
    const auto order = j.at("order").get<std::size_t>();
    auto type = j.at("type").get<std::vector<std::int64_t>>();
    if (j.contains("vars") && j.at("vars").get<std::size_t>() != type.size())
      throw Error("design JSON: type length differs from vars");
    DesignMatrix x(order, std::move(group), std::move(type));
    const auto& rows = j.at("rows");
    if (rows.size() != order) throw Error("design JSON: wrong number of rows");
    for (std::size_t r = 0; r < order; ++r) {
      if (rows[r].size() != order) throw Error("design JSON: row has wrong length");
      for (std::size_t c = 0; c < order; ++c)
        x.set(r, c, parse_entry(x.group(), rows[r][c].get<std::string>()));
    }
    return x;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("design JSON: ") + e.what());
  }
}

DesignMatrix read_design(std::istream& is) {
  while (is && std::isspace(is.peek())) is.get();
  if (is.peek() == '{') return read_design_json(is);
  return read_design_text(is);
}

DesignMatrix load_design(const std::string& path) {
  if (path == "-") return read_design(std::cin);
  std::ifstream in(path);
  if (!in) throw Error("cannot open design file '" + path + "'");
  return read_design(in);
}

void save_design(const std::string& path, const DesignMatrix& x, bool json) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write design file '" + path + "'");
  json ? write_design_json(out, x) : write_design_text(out, x);
}

}  // namespace sodforge
