#pragma once

#include <map>
#include <string>
#include <vector>

#include "sdirac/types.hpp"

namespace sdirac {

/// Fixed scientific formatting used for every float the tool emits
/// (%.12e), so identical configs give byte-identical output.
std::string format_sci(double v);

/// Complex literal "a+bi" / "a-bi" in %.12e.
std::string format_complex(Complex v);

// Streaming JSON writer with ordered keys and format_sci numbers.
class JsonWriter {
public:
    void begin_object();
    void end_object();
    void begin_array();
    void end_array();
    void key(const std::string& k);
    void value_number(double v);
    void value_int(long long v);
    void value_string(const std::string& s);
    void value_bool(bool b);
    void value_complex(Complex v); // {"re": ..., "im": ...}
    const std::string& str() const { return out_; }

private:
    void comma();
    std::string out_;
    std::vector<bool> first_stack_{};
    bool pending_key_ = false;
};

/// Parse "1/2", "3/2", "-5/2", "0.5", "2" into a doubled half-integer.
/// Throws DomainError when the token is not a half-integer.
int parse_half_integer_doubled(const std::string& s);

/// Parse "a+bi" / "a-bi" / "a" complex literals (shell-safe single token).
Complex parse_complex(const std::string& s);

/// Parse "x,y,z" into a 3-vector.
Vec3 parse_vec3(const std::string& s);

/// Plain-text key=value config, one pair per line, '#' comments.
std::map<std::string, std::string> parse_config_file(const std::string& path);

/// CSV writer: header then rows, all floats in format_sci.
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows);

} // namespace sdirac
