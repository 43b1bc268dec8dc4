#include "resknap/core.hpp"

#include <istream>
#include <string>

namespace resknap {

Rat density(const Item& item) { return item.value / item.size; }

Rat reservation_cost(const Item& item, const Mode& mode) {
    return mode.kind == CostKind::SizeProportional ? Rat(mode.alpha * item.size)
                                                   : Rat(mode.alpha * item.value);
}

GainReport gain(std::span<const Item> packed, std::span<const Item> reserved,
                const Mode& mode) {
    Rat packed_value(0), packed_size(0), cost(0);
    for (const Item& item : packed) {
        packed_value += item.value;
        packed_size += item.size;
    }
    if (packed_size > 1) throw CapacityExceeded();
    for (const Item& item : reserved) cost += reservation_cost(item, mode);
    return GainReport{packed_value, cost, packed_value - cost};
}

Ratio ratio(const Rat& opt_gain, const Rat& alg_gain, const Rat& beta) {
    if (opt_gain <= beta) return Ratio::finite(Rat(0));
    if (alg_gain <= 0) return Ratio::inf();
    return Ratio::finite(Rat((opt_gain - beta) / alg_gain));
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

Instance parse_instance(std::istream& in) {
    Instance instance;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = trim(raw);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = trim(line.substr(0, hash));
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string_view::npos)
            throw ParseError(line_no, "expected 'size,value'");
        Rat size, value;
        try {
            size = rat_from_decimal(trim(line.substr(0, comma)));
            value = rat_from_decimal(trim(line.substr(comma + 1)));
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
        if (size <= 0) throw ParseError(line_no, "size must be > 0");
        if (size > 1) throw ParseError(line_no, "size must be <= 1");
        if (value < 0) throw ParseError(line_no, "value must be >= 0");
        instance.items.push_back(Item{size, value, instance.items.size()});
    }
    return instance;
}

}  // namespace resknap
