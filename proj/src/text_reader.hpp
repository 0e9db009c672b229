#ifndef DIGITOP_TEXT_READER_HPP
#define DIGITOP_TEXT_READER_HPP

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "digitop/errors.hpp"

namespace digitop::detail {

// Line-oriented reader for the text formats: strips `#` comments, skips
// blank lines, tracks line numbers for error messages.
class TextReader {
  public:
    explicit TextReader(std::istream& in, std::string origin) : in_(in), origin_(std::move(origin)) {}

    // Next non-blank line with comments removed; false at EOF.
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
            std::size_t b = raw.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            std::size_t e = raw.find_last_not_of(" \t\r");
            out = raw.substr(b, e - b + 1);
            return true;
        }
        return false;
    }

    std::string require(const char* what) {
        std::string s;
        if (!next(s)) throw InputError(origin_ + ": unexpected end of file, expected " + std::string(what));
        return s;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError(origin_ + ":" + std::to_string(line_) + ": " + msg);
    }

    static std::vector<std::string> tokens(const std::string& line) {
        std::istringstream ss(line);
        std::vector<std::string> out;
        std::string t;
        while (ss >> t) out.push_back(t);
        return out;
    }

    std::int64_t parse_int(const std::string& tok) const {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            fail("expected integer, got '" + tok + "'");
        }
        if (used != tok.size()) fail("expected integer, got '" + tok + "'");
        return v;
    }

    int parse_count(const std::string& tok, const char* what) const {
        std::int64_t v = parse_int(tok);
        if (v < 0 || v > 100000000) fail(std::string(what) + " out of range: " + tok);
        return static_cast<int>(v);
    }

  private:
    std::istream& in_;
    std::string origin_;
    int line_ = 0;
};

} // namespace digitop::detail

#endif
