#include "dce/csv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace dce::csv {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    char buf[64];
    // to_chars ignores the global locale, so the decimal point is always '.'.
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return {buf, res.ptr};
}

std::string escape(std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

Writer::Writer(std::ostream& out, std::vector<std::string> header) : out_(out), columns_(header.size()) {
    for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << escape(header[i]);
    out_ << '\n';
}

void Writer::row(const std::vector<Cell>& cells) {
    if (cells.size() != columns_) throw std::invalid_argument("csv row has the wrong number of columns");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, double>) out_ << format_number(v);
                else if constexpr (std::is_same_v<T, long long>) out_ << v;
                else out_ << escape(v);
            },
            cells[i]);
    }
    out_ << '\n';
}

}  // namespace dce::csv
