#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "haantjes/errors.hpp"

namespace haantjes {

/// Returns true for identifiers of the form [a-zA-Z][a-zA-Z0-9_]*.
bool is_identifier(std::string_view s);

/// Ordered list of distinct coordinate names. The order is load-bearing: it
/// fixes the monomial order and hence every canonical form. Cheap to copy.
class Chart {
 public:
  explicit Chart(std::vector<std::string> names);

  int dim() const { return static_cast<int>(names_->size()); }
  const std::string& name(int i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<int> index_of(std::string_view name) const;

  bool operator==(const Chart& o) const {
    return names_ == o.names_ || *names_ == *o.names_;
  }
  bool operator!=(const Chart& o) const { return !(*this == o); }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Throws ChartMismatchError unless the two charts agree.
void require_same_chart(const Chart& a, const Chart& b);

}  // namespace haantjes
