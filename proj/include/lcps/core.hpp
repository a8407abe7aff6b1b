#ifndef LCPS_CORE_HPP
#define LCPS_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lcps {

/// One octet of input. The alphabet is whatever octets occur in the inputs.
using Symbol = unsigned char;

/// 1-based position into a sequence.
using Pos = std::int32_t;

/// Byte sequence with 1-based access, matching the x_1..x_n convention used
/// throughout the library. Position 0 is never valid.
class Seq {
public:
    Seq() = default;
    explicit Seq(std::string bytes) : bytes_(std::move(bytes)) {}
    explicit Seq(std::string_view bytes) : bytes_(bytes) {}
    explicit Seq(const char* bytes) : bytes_(bytes) {}

    Pos len() const { return static_cast<Pos>(bytes_.size()); }
    bool empty() const { return bytes_.empty(); }

    // unchecked; pos in [1, len()]
    Symbol operator[](Pos pos) const { return static_cast<Symbol>(bytes_[static_cast<std::size_t>(pos - 1)]); }
    Symbol at(Pos pos) const;

    const std::string& str() const { return bytes_; }
    std::string_view view() const { return bytes_; }

    Seq reversed() const { return Seq(std::string(bytes_.rbegin(), bytes_.rend())); }

    friend bool operator==(const Seq&, const Seq&) = default;

private:
    std::string bytes_;
};

/// A common palindromic subsequence together with its embedding in both
/// inputs. Index lists are 1-based and strictly increasing.
struct CpsResult {
    std::string z;
    std::vector<Pos> x_indices;
    std::vector<Pos> y_indices;

    std::size_t length() const { return z.size(); }
};

// Error classes shared by the solvers. The C API maps each onto a status code.
class CapacityExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidWitness : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class LengthMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_palindrome(std::string_view z);

/// Greedy left-to-right embedding test.
bool is_subsequence(std::string_view z, std::string_view x);

/// True iff r is a palindrome of length |x_indices| = |y_indices| whose
/// characters are read off x and y at strictly increasing in-range positions.
bool validate_witness(const CpsResult& r, const Seq& x, const Seq& y);

} // namespace lcps

#endif // LCPS_CORE_HPP
