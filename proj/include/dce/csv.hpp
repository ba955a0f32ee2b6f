#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dce::csv {

using Cell = std::variant<double, long long, std::string>;

/// 12 significant digits, '.' decimal point regardless of locale.
std::string format_number(double v);

/// Quotes the field when it holds a comma, quote or newline.
std::string escape(std::string_view s);

/// Writes the header immediately, then one line per row.
class Writer {
public:
    Writer(std::ostream& out, std::vector<std::string> header);

    void row(const std::vector<Cell>& cells);
    std::size_t columns() const noexcept { return columns_; }

private:
    std::ostream& out_;
    std::size_t columns_;
};

}  // namespace dce::csv
