#include "dwbc/binio.hpp"

#include <bit>
#include <cstring>
#include <limits>

namespace dwbc {

namespace {

// Serialize integers byte-by-byte so the on-disk layout is little-endian
// regardless of host order.
template <typename T>
void encode_le(T v, unsigned char* out) {
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        out[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xFF);
    }
}

template <typename T>
T decode_le(const unsigned char* in) {
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        v |= static_cast<T>(in[i]) << (8 * i);
    }
    return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// BinaryWriter
// ---------------------------------------------------------------------------

BinaryWriter::BinaryWriter(const std::string& path)
    : file_(path, std::ios::binary | std::ios::trunc), path_(path) {
    if (!file_) {
        throw IoError("cannot open for writing: " + path);
    }
}

void BinaryWriter::put_bytes(const void* data, std::size_t n) {
    file_.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
    if (!file_) {
        throw IoError("write failed: " + path_);
    }
}

void BinaryWriter::write_magic(const char magic[8], std::uint32_t version) {
    put_bytes(magic, 8);
    write_u32(version);
}

void BinaryWriter::write_u8(std::uint8_t v) { put_bytes(&v, 1); }

void BinaryWriter::write_u32(std::uint32_t v) {
    unsigned char buf[4];
    encode_le(v, buf);
    put_bytes(buf, 4);
}

void BinaryWriter::write_u64(std::uint64_t v) {
    unsigned char buf[8];
    encode_le(v, buf);
    put_bytes(buf, 8);
}

void BinaryWriter::write_f64(double v) {
    write_u64(std::bit_cast<std::uint64_t>(v));
}

void BinaryWriter::write_string(const std::string& s) {
    write_u32(static_cast<std::uint32_t>(s.size()));
    if (!s.empty()) {
        put_bytes(s.data(), s.size());
    }
}

void BinaryWriter::write_f64_array(const std::vector<double>& v) {
    write_u64(v.size());
    for (double x : v) {
        write_f64(x);
    }
}

void BinaryWriter::close() {
    file_.close();
    if (file_.fail()) {
        throw IoError("close failed: " + path_);
    }
}

// ---------------------------------------------------------------------------
// BinaryReader
// ---------------------------------------------------------------------------

BinaryReader::BinaryReader(const std::string& path)
    : file_(path, std::ios::binary), path_(path) {
    if (!file_) {
        throw IoError("cannot open for reading: " + path);
    }
}

void BinaryReader::get_bytes(void* data, std::size_t n) {
    file_.read(static_cast<char*>(data), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(file_.gcount()) != n) {
        throw TruncatedFileError("truncated file: " + path_);
    }
}

std::uint32_t BinaryReader::read_magic(const char magic[8],
                                       std::uint32_t expected_version) {
    char got[8];
    get_bytes(got, 8);
    if (std::memcmp(got, magic, 8) != 0) {
        throw BadMagicError("bad magic in " + path_);
    }
    const std::uint32_t version = read_u32();
    if (version != expected_version) {
        throw VersionMismatchError("schema version " + std::to_string(version) +
                                   " != expected " +
                                   std::to_string(expected_version) + " in " +
                                   path_);
    }
    return version;
}

std::uint8_t BinaryReader::read_u8() {
    std::uint8_t v;
    get_bytes(&v, 1);
    return v;
}

std::uint32_t BinaryReader::read_u32() {
    unsigned char buf[4];
    get_bytes(buf, 4);
    return decode_le<std::uint32_t>(buf);
}

std::uint64_t BinaryReader::read_u64() {
    unsigned char buf[8];
    get_bytes(buf, 8);
    return decode_le<std::uint64_t>(buf);
}

double BinaryReader::read_f64() {
    return std::bit_cast<double>(read_u64());
}

std::string BinaryReader::read_string() {
    const std::uint32_t n = read_u32();
    if (n > (1u << 20)) {
        throw CorruptFileError("unreasonable string length in " + path_);
    }
    std::string s(n, '\0');
    if (n > 0) {
        get_bytes(s.data(), n);
    }
    return s;
}

std::vector<double> BinaryReader::read_f64_array() {
    const std::uint64_t n = read_u64();
    if (n > (std::uint64_t{1} << 32)) {
        throw CorruptFileError("unreasonable array length in " + path_);
    }
    std::vector<double> v(static_cast<std::size_t>(n));
    for (auto& x : v) {
        x = read_f64();
    }
    return v;
}

bool BinaryReader::at_eof() {
    return file_.peek() == std::char_traits<char>::eof();
}

}  // namespace dwbc
