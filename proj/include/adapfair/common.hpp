#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace adapfair {

enum class ErrorKind {
  InvalidInput,
  InvalidConfig,
  NumericalFailure,
  DualNotConverged,
  InstanceTooLarge,
  UnsupportedDimension,
  DegenerateGroup,
  SchemaError,
  ParseError,
  EmptyDataset,
  TooSmallToSplit,
  TrainingFailure,
  IoError,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::DualNotConverged: return "DualNotConverged";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::DegenerateGroup: return "DegenerateGroup";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptyDataset: return "EmptyDataset";
    case ErrorKind::TooSmallToSplit: return "TooSmallToSplit";
    case ErrorKind::TrainingFailure: return "TrainingFailure";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  /// True when the condition is attributable to caller input rather than
  /// a numerical breakdown. Drives the CLI exit code (1 vs 2).
  bool user_error() const {
    switch (kind_) {
      case ErrorKind::InvalidInput:
      case ErrorKind::InvalidConfig:
      case ErrorKind::InstanceTooLarge:
      case ErrorKind::UnsupportedDimension:
      case ErrorKind::DegenerateGroup:
      case ErrorKind::SchemaError:
      case ErrorKind::ParseError:
      case ErrorKind::EmptyDataset:
      case ErrorKind::TooSmallToSplit:
      case ErrorKind::IoError:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

// ---------------------------------------------------------------------------
// Hashing

inline uint64_t fnv1a64(const void* data, size_t len, uint64_t h = 14695981039346656037ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

inline uint64_t fnv1a64(const Eigen::VectorXd& v) {
  return fnv1a64(v.data(), static_cast<size_t>(v.size()) * sizeof(double));
}

inline std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Little-endian binary IO for the versioned model/dataset file formats.
// All multi-byte values are written least-significant byte first regardless
// of host order, so files are portable and round-trips are bit-exact.

class BinaryWriter {
 public:
  explicit BinaryWriter(const std::string& path) : out_(path, std::ios::binary) {
    if (!out_) fail(ErrorKind::IoError, "cannot open for writing: " + path);
  }

  void magic(const char tag[8]) { raw(tag, 8); }

  void u8(uint8_t v) { raw(&v, 1); }

  void u32(uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    raw(b, 4);
  }

  void u64(uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    raw(b, 8);
  }

  void f64(double v) {
    uint64_t bits;
    std::memcpy(&bits, &v, 8);
    u64(bits);
  }

  void str(const std::string& s) {
    u64(s.size());
    raw(s.data(), s.size());
  }

  void vec(const Eigen::VectorXd& v) {
    u64(static_cast<uint64_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) f64(v[i]);
  }

  uint64_t checksum() const { return hash_; }

  void finish_with_checksum() {
    uint64_t h = hash_;  // checksum covers everything before the trailer
    u64(h);
  }

  void close() {
    out_.close();
    if (!out_) fail(ErrorKind::IoError, "write failed on close");
  }

 private:
  void raw(const void* p, size_t n) {
    out_.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
    if (!out_) fail(ErrorKind::IoError, "write failed");
    hash_ = fnv1a64(p, n, hash_);
  }

  std::ofstream out_;
  uint64_t hash_ = 14695981039346656037ull;
};

class BinaryReader {
 public:
  explicit BinaryReader(const std::string& path) : in_(path, std::ios::binary), path_(path) {
    if (!in_) fail(ErrorKind::IoError, "cannot open: " + path);
  }

  void expect_magic(const char tag[8]) {
    char got[8];
    raw(got, 8);
    if (std::memcmp(got, tag, 8) != 0)
      fail(ErrorKind::ParseError, "bad file magic in " + path_);
  }

  uint8_t u8() {
    uint8_t v;
    raw(&v, 1);
    return v;
  }

  uint32_t u32() {
    unsigned char b[4];
    raw(b, 4);
    uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
    return v;
  }

  uint64_t u64() {
    unsigned char b[8];
    raw(b, 8);
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
    return v;
  }

  double f64() {
    uint64_t bits = u64();
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
  }

  std::string str() {
    uint64_t n = u64();
    if (n > (1ull << 30)) fail(ErrorKind::ParseError, "string length corrupt in " + path_);
    std::string s(n, '\0');
    raw(s.data(), n);
    return s;
  }

  Eigen::VectorXd vec() {
    uint64_t n = u64();
    if (n > (1ull << 28)) fail(ErrorKind::ParseError, "vector length corrupt in " + path_);
    Eigen::VectorXd v(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = f64();
    return v;
  }

  // Reads the trailing checksum and verifies it against everything read so far.
  void verify_checksum() {
    uint64_t expected = hash_;
    uint64_t stored = u64();
    if (stored != expected)
      fail(ErrorKind::ParseError, "checksum mismatch in " + path_);
  }

 private:
  void raw(void* p, size_t n) {
    in_.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
    if (static_cast<size_t>(in_.gcount()) != n)
      fail(ErrorKind::ParseError, "unexpected end of file in " + path_);
    hash_ = fnv1a64(p, n, hash_);
  }

  std::ifstream in_;
  std::string path_;
  uint64_t hash_ = 14695981039346656037ull;
};

}  // namespace adapfair
