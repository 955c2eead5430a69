#include "ssmid/harness/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ssmid/errors.hpp"

namespace ssmid::harness {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

double parse_field(const std::string& s, std::size_t line) {
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    if (s == "nan") return NAN;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("line " + std::to_string(line) + ": not a number: '" + s + "'", line);
    return v;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) {
        if (!cell.empty() && cell.back() == '\r') cell.pop_back();
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace

void write_chain_csv(const std::filesystem::path& path, const ParameterChain& chain) {
    auto out = open_out(path);
    out << "m";
    for (const auto& n : chain.names) out << ',' << n;
    out << ",loglik,accepted\n";
    for (std::size_t m = 0; m < chain.size(); ++m) {
        out << m;
        for (double v : chain.draws[m]) out << ',' << format_double(v);
        out << ',' << format_double(chain.loglik[m]) << ',' << static_cast<int>(chain.accepted[m]) << '\n';
    }
}

ChainTable read_chain_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string(), 0);
    ChainTable t;
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty chain file", 1);
    const auto header = split(line);
    if (header.size() < 4 || header.front() != "m" || header[header.size() - 2] != "loglik" ||
        header.back() != "accepted")
        throw ParseError("line 1: expected header m,<params...>,loglik,accepted", 1);
    t.names.assign(header.begin() + 1, header.end() - 2);
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto cells = split(line);
        if (cells.size() != header.size())
            throw ParseError("line " + std::to_string(lineno) + ": wrong number of fields", lineno);
        std::vector<double> row;
        for (std::size_t j = 1; j + 2 < cells.size(); ++j) row.push_back(parse_field(cells[j], lineno));
        t.draws.push_back(std::move(row));
        t.loglik.push_back(parse_field(cells[cells.size() - 2], lineno));
        t.accepted.push_back(parse_field(cells.back(), lineno) != 0.0 ? 1 : 0);
    }
    return t;
}

void write_iterates_csv(const std::filesystem::path& path, const std::vector<std::string>& names,
                        const std::vector<std::vector<double>>& params, const std::vector<double>& objective,
                        const std::vector<double>& step_size) {
    auto out = open_out(path);
    out << "k";
    for (const auto& n : names) out << ',' << n;
    out << ",objective,step_size\n";
    for (std::size_t k = 0; k < params.size(); ++k) {
        out << k;
        for (double v : params[k]) out << ',' << format_double(v);
        out << ',' << format_double(k < objective.size() ? objective[k] : NAN) << ','
            << format_double(k < step_size.size() ? step_size[k] : NAN) << '\n';
    }
}

void write_histogram_csv(const std::filesystem::path& path, const Histogram& h) {
    auto out = open_out(path);
    out << "bin_left,bin_right,count\n";
    for (std::size_t b = 0; b < h.counts.size(); ++b)
        out << format_double(h.edges[b]) << ',' << format_double(h.edges[b + 1]) << ',' << h.counts[b] << '\n';
}

void write_trace_csv(const std::filesystem::path& path, const ParticleSystem& ps) {
    auto out = open_out(path);
    out << "t,i,x,logw,a\n";
    for (std::size_t t = 0; t < ps.length(); ++t) {
        for (std::size_t i = 0; i < ps.num_particles; ++i) {
            out << t + 1 << ',' << i + 1 << ',' << format_double(ps.particles[t][i]) << ','
                << format_double(ps.log_weights[t][i]) << ',';
            if (t > 0) out << ps.ancestors[t][i] + 1;
            out << '\n';
        }
    }
}

void write_table_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& columns) {
    auto out = open_out(path);
    for (std::size_t j = 0; j < header.size(); ++j) out << (j ? "," : "") << header[j];
    out << '\n';
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t j = 0; j < columns.size(); ++j) out << (j ? "," : "") << format_double(columns[j][r]);
        out << '\n';
    }
}

}  // namespace ssmid::harness
