#include "sdirac/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sdirac/errors.hpp"

namespace sdirac {

std::string format_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

std::string format_complex(Complex v) {
    const std::string re = format_sci(v.real());
    std::string im = format_sci(std::abs(v.imag()));
    return re + (v.imag() < 0.0 ? "-" : "+") + im + "i";
}

void JsonWriter::comma() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!first_stack_.empty()) {
        if (!first_stack_.back()) out_ += ",";
        first_stack_.back() = false;
    }
}

void JsonWriter::begin_object() {
    comma();
    out_ += "{";
    first_stack_.push_back(true);
}

void JsonWriter::end_object() {
    out_ += "}";
    first_stack_.pop_back();
}

void JsonWriter::begin_array() {
    comma();
    out_ += "[";
    first_stack_.push_back(true);
}

void JsonWriter::end_array() {
    out_ += "]";
    first_stack_.pop_back();
}

void JsonWriter::key(const std::string& k) {
    comma();
    out_ += "\"" + k + "\":";
    pending_key_ = true;
}

void JsonWriter::value_number(double v) {
    comma();
    out_ += format_sci(v);
}

void JsonWriter::value_int(long long v) {
    comma();
    out_ += std::to_string(v);
}

void JsonWriter::value_string(const std::string& s) {
    comma();
    out_ += "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out_ += '\\';
        out_ += c;
    }
    out_ += "\"";
}

void JsonWriter::value_bool(bool b) {
    comma();
    out_ += b ? "true" : "false";
}

void JsonWriter::value_complex(Complex v) {
    begin_object();
    key("re");
    value_number(v.real());
    key("im");
    value_number(v.imag());
    end_object();
}

int parse_half_integer_doubled(const std::string& s) {
    if (s.empty()) throw DomainError("parse_half_integer: empty token");
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (den != "2") throw DomainError("parse_half_integer: denominator must be 2 in '" + s + "'");
        try {
            return std::stoi(num);
        } catch (...) {
            throw DomainError("parse_half_integer: bad numerator in '" + s + "'");
        }
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw DomainError("parse_half_integer: trailing junk in '" + s + "'");
        const double doubled = 2.0 * v;
        const double r = std::round(doubled);
        if (std::abs(doubled - r) > 1e-9)
            throw DomainError("parse_half_integer: '" + s + "' is not a half-integer");
        return static_cast<int>(r);
    } catch (const DomainError&) {
        throw;
    } catch (...) {
        throw DomainError("parse_half_integer: cannot parse '" + s + "'");
    }
}

Complex parse_complex(const std::string& s) {
    if (s.empty()) throw DomainError("parse_complex: empty token");
    // pure real fast path
    if (s.find('i') == std::string::npos) {
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used != s.size())
                throw DomainError("parse_complex: trailing junk in '" + s + "'");
            return Complex{v, 0.0};
        } catch (const DomainError&) {
            throw;
        } catch (...) {
            throw DomainError("parse_complex: cannot parse '" + s + "'");
        }
    }
    std::string t = s;
    if (t.back() != 'i') throw DomainError("parse_complex: expected trailing 'i' in '" + s + "'");
    t.pop_back();
    // split at the last +/- that is not an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t i = t.size(); i-- > 1;) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    try {
        if (split == std::string::npos) {
            // "bi" or "i"
            if (t.empty() || t == "+") return Complex{0.0, 1.0};
            if (t == "-") return Complex{0.0, -1.0};
            return Complex{0.0, std::stod(t)};
        }
        const double re = std::stod(t.substr(0, split));
        std::string imtok = t.substr(split);
        if (imtok == "+") imtok = "1";
        if (imtok == "-") imtok = "-1";
        return Complex{re, std::stod(imtok)};
    } catch (...) {
        throw DomainError("parse_complex: cannot parse '" + s + "'");
    }
}

Vec3 parse_vec3(const std::string& s) {
    std::stringstream ss(s);
    std::string tok;
    Vec3 v{};
    for (int i = 0; i < 3; ++i) {
        if (!std::getline(ss, tok, ',')) throw DomainError("parse_vec3: need x,y,z in '" + s + "'");
        try {
            v[i] = std::stod(tok);
        } catch (...) {
            throw DomainError("parse_vec3: bad component '" + tok + "'");
        }
    }
    if (std::getline(ss, tok, ',')) throw DomainError("parse_vec3: too many components in '" + s + "'");
    return v;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("config: cannot open '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto strip = [](std::string x) {
            const auto a = x.find_first_not_of(" \t\r");
            if (a == std::string::npos) return std::string{};
            const auto b = x.find_last_not_of(" \t\r");
            return x.substr(a, b - a + 1);
        };
        line = strip(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError("config: line " + std::to_string(lineno) + " is not key=value");
        const std::string k = strip(line.substr(0, eq)), v = strip(line.substr(eq + 1));
        if (k.empty()) throw DomainError("config: empty key at line " + std::to_string(lineno));
        kv[k] = v;
    }
    return kv;
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        out += header[i];
        out += (i + 1 < header.size()) ? "," : "\n";
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += row[i];
            out += (i + 1 < row.size()) ? "," : "\n";
        }
    }
    return out;
}

} // namespace sdirac
