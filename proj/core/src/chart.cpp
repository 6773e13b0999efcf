#include "haantjes/chart.hpp"

#include <cctype>
#include <unordered_set>

namespace haantjes {

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s.substr(1))
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Chart::Chart(std::vector<std::string> names) {
  if (names.empty()) throw Error("chart needs at least one coordinate");
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw Error("invalid coordinate name '" + n + "'");
    if (!seen.insert(n).second) throw Error("duplicate coordinate name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<int> Chart::index_of(std::string_view name) const {
  for (int i = 0; i < dim(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

void require_same_chart(const Chart& a, const Chart& b) {
  if (a != b) throw ChartMismatchError("values live on different charts");
}

}  // namespace haantjes
