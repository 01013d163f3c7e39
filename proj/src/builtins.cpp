#include "boolnet/builtins.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace boolnet {

namespace {

constexpr std::array<std::array<std::uint32_t, 16>, 16> kBuiltinTables{{
    {14, 15, 12, 13, 10, 11, 8, 9, 6, 7, 4, 5, 2, 3, 1, 0},    // F1
    {14, 15, 12, 13, 10, 11, 8, 9, 6, 7, 5, 4, 3, 2, 0, 1},    // F2
    {14, 15, 12, 13, 10, 11, 8, 9, 6, 7, 5, 4, 3, 2, 1, 0},    // F3
    {14, 15, 12, 13, 10, 11, 9, 8, 6, 7, 5, 4, 3, 2, 0, 1},    // F4
    {14, 15, 12, 13, 10, 11, 9, 8, 6, 7, 5, 4, 3, 2, 1, 0},    // F5
    {14, 15, 12, 13, 10, 11, 9, 8, 7, 6, 4, 5, 2, 3, 0, 1},    // F6
    {14, 15, 12, 13, 10, 11, 9, 8, 7, 6, 4, 5, 2, 3, 1, 0},    // F7
    {14, 15, 12, 13, 10, 11, 9, 8, 7, 6, 4, 5, 3, 2, 1, 0},    // F8
    {14, 15, 12, 13, 10, 11, 9, 8, 7, 6, 5, 4, 3, 2, 0, 1},    // F9
    {14, 15, 12, 13, 10, 11, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0},    // F10
    {14, 15, 12, 13, 11, 10, 9, 8, 7, 6, 5, 4, 2, 3, 1, 0},    // F11
    {14, 15, 13, 12, 11, 10, 8, 9, 7, 6, 4, 5, 2, 3, 1, 0},    // F12
    {14, 15, 13, 12, 11, 10, 8, 9, 7, 6, 4, 5, 3, 2, 1, 0},    // F13
    {14, 15, 13, 12, 11, 10, 8, 9, 7, 6, 5, 4, 3, 2, 1, 0},    // F14
    {14, 15, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 0, 1},    // F15
    {14, 15, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0},    // F16
}};

}  // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (std::size_t i = 1; i <= kBuiltinTables.size(); ++i)
            v.push_back("F" + std::to_string(i));
        return v;
    }();
    return names;
}

std::optional<BooleanMap> builtin_map(std::string_view name) {
    for (std::size_t i = 0; i < kBuiltinTables.size(); ++i)
        if (name == builtin_names()[i]) {
            const auto& t = kBuiltinTables[i];
            return BooleanMap(4, std::vector<std::uint32_t>(t.begin(), t.end()));
        }
    return std::nullopt;
}

BooleanMap load_map(const std::string& name_or_path) {
    if (auto builtin = builtin_map(name_or_path)) return *builtin;
    std::ifstream in(name_or_path);
    if (!in)
        throw std::invalid_argument("cannot open function file '" + name_or_path +
                                    "' (and it is not a builtin name)");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return BooleanMap::parse(buffer.str());
}

}  // namespace boolnet
