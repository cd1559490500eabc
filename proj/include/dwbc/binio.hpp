#ifndef DWBC_BINIO_HPP
#define DWBC_BINIO_HPP

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dwbc {

// =============================================================================
// File-format errors
// =============================================================================

// Base class for every binary-format failure. Subclasses distinguish the
// failure modes callers are expected to handle separately.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

class BadMagicError : public FormatError {
public:
    explicit BadMagicError(const std::string& msg) : FormatError(msg) {}
};

class VersionMismatchError : public FormatError {
public:
    explicit VersionMismatchError(const std::string& msg) : FormatError(msg) {}
};

class TruncatedFileError : public FormatError {
public:
    explicit TruncatedFileError(const std::string& msg) : FormatError(msg) {}
};

class CorruptFileError : public FormatError {
public:
    explicit CorruptFileError(const std::string& msg) : FormatError(msg) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// =============================================================================
// Little-endian binary writer / reader
// =============================================================================

// All on-disk formats share this envelope: an 8-byte magic, a u32 schema
// version, then format-specific payload. Everything is little-endian and
// floats are stored as raw IEEE-754 bit patterns, so round-trips are
// bit-exact.

class BinaryWriter {
public:
    explicit BinaryWriter(const std::string& path);

    void write_magic(const char magic[8], std::uint32_t version);
    void write_u8(std::uint8_t v);
    void write_u32(std::uint32_t v);
    void write_u64(std::uint64_t v);
    void write_f64(double v);
    void write_string(const std::string& s);
    // u64 length prefix followed by raw float64 payload.
    void write_f64_array(const std::vector<double>& v);

    void close();

private:
    void put_bytes(const void* data, std::size_t n);

    std::ofstream file_;
    std::string path_;
};

class BinaryReader {
public:
    explicit BinaryReader(const std::string& path);

    // Throws BadMagicError / VersionMismatchError when the header does not
    // match the expected magic/version.
    std::uint32_t read_magic(const char magic[8], std::uint32_t expected_version);
    std::uint8_t read_u8();
    std::uint32_t read_u32();
    std::uint64_t read_u64();
    double read_f64();
    std::string read_string();
    std::vector<double> read_f64_array();

    // True once every payload byte has been consumed.
    bool at_eof();

private:
    void get_bytes(void* data, std::size_t n);

    std::ifstream file_;
    std::string path_;
};

}  // namespace dwbc

#endif  // DWBC_BINIO_HPP
