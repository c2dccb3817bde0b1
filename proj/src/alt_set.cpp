#include "teqset/alt_set.hpp"

#include <charconv>
#include <stdexcept>

namespace teqset {

std::string format_one_based(AltSet s) {
    std::string out;
    for (int m : s) {
        if (!out.empty()) out += ' ';
        out += std::to_string(m + 1);
    }
    return out;
}

AltSet parse_one_based_list(const std::string& text, int order) {
    AltSet result;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string_view token(text.data() + pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
            throw std::invalid_argument("bad index '" + std::string(token) + "' in list '" + text + "'");
        }
        if (value < 1 || value > order) {
            throw std::invalid_argument("index " + std::to_string(value) + " outside 1.." +
                                        std::to_string(order));
        }
        result = result.with(value - 1);
        pos = comma + 1;
    }
    return result;
}

}  // namespace teqset
