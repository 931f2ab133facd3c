// setfile.cpp

#include "smallbias/setfile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace smallbias {

namespace {

constexpr std::string_view kMagic = "smallbias set file v1";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::uint64_t parse_count(std::string_view value, std::string_view key, std::size_t line) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw SetFileError("line " + std::to_string(line) + ": '" + std::string(key) + "' is not a non-negative integer");
    }
    return out;
}

}  // namespace

void write_set_file(std::ostream& out, const CandidateSet& s) {
    validate(s);
    out << "# " << kMagic << '\n';
    out << "# n: " << s.n << '\n';
    out << "# method: " << s.method << '\n';
    out << "# size: " << s.size() << '\n';
    out << "# random_bits: " << s.random_bits << '\n';
    for (const auto& [key, value] : s.params) out << "# " << key << ": " << value << '\n';
    for (const auto& x : s.elements) out << x.to_hex() << '\n';
}

std::string serialize(const CandidateSet& s) {
    std::ostringstream out;
    write_set_file(out, s);
    return out.str();
}

CandidateSet read_set_file(std::istream& in) {
    CandidateSet s;
    bool have_n = false;
    std::optional<std::uint64_t> declared_size;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string_view text = trim(raw);
        if (text.empty()) throw SetFileError("line " + std::to_string(line) + ": empty line");
        if (text.front() == '#') {
            if (!s.elements.empty()) throw SetFileError("line " + std::to_string(line) + ": header after elements");
            const std::string_view body = trim(text.substr(1));
            const auto colon = body.find(':');
            if (colon == std::string_view::npos) continue;  // free-form comment
            const std::string_view key = trim(body.substr(0, colon));
            const std::string_view value = trim(body.substr(colon + 1));
            if (key == "n") {
                s.n = parse_count(value, key, line);
                if (s.n == 0) throw SetFileError("line " + std::to_string(line) + ": n must be positive");
                have_n = true;
            } else if (key == "method") {
                s.method = value;
            } else if (key == "size") {
                declared_size = parse_count(value, key, line);
            } else if (key == "random_bits") {
                s.random_bits = parse_count(value, key, line);
            } else {
                s.params.emplace_back(std::string(key), std::string(value));
            }
            continue;
        }
        if (!have_n) throw SetFileError("line " + std::to_string(line) + ": element before the 'n' header");
        if (text.size() != (s.n + 3) / 4) {
            throw SetFileError("line " + std::to_string(line) + ": expected " + std::to_string((s.n + 3) / 4) +
                               " hex digits");
        }
        try {
            s.elements.push_back(BitVector::from_hex(s.n, text));
        } catch (const std::invalid_argument& e) {
            throw SetFileError("line " + std::to_string(line) + ": " + e.what());
        }
    }
    if (!have_n) throw SetFileError("missing 'n' header");
    if (s.elements.empty()) throw SetFileError("set file has no elements");
    if (declared_size && *declared_size != s.size()) {
        throw SetFileError("header declares " + std::to_string(*declared_size) + " elements, body has " +
                           std::to_string(s.size()));
    }
    return s;
}

CandidateSet parse_set_file(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_set_file(in);
}

CandidateSet load_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SetFileError("cannot open " + path);
    return read_set_file(in);
}

void save_set_file(const std::string& path, const CandidateSet& s) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SetFileError("cannot write " + path);
    write_set_file(out, s);
    if (!out) throw SetFileError("write failed for " + path);
}

}  // namespace smallbias
