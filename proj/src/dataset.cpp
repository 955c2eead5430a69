#include "ssmid/dataset.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string_view>

#include "ssmid/errors.hpp"

namespace ssmid {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

}  // namespace

Dataset ingest_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open dataset file " + path.string(), 0);
    Dataset data;
    data.label = path.filename().string();
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto text = trim(line);
        if (text.empty()) continue;
        if (lineno == 1 && text.front() == '#') {
            data.label = std::string(trim(text.substr(1)));
            continue;
        }
        double value = 0.0;
        const char* first = text.data();
        const char* last = text.data() + text.size();
        if (*first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
            throw ParseError(path.string() + ":" + std::to_string(lineno) + ": not a finite number: '" +
                                 std::string(text) + "'",
                             lineno);
        }
        data.y.push_back(value);
    }
    return data;
}

void write_dataset(const std::filesystem::path& path, const Dataset& data) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write dataset file " + path.string());
    if (!data.label.empty()) out << "# " << data.label << '\n';
    char buf[32];
    for (double v : data.y) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << buf << '\n';
    }
}

}  // namespace ssmid
