#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace saferc {

/// Append-only byte target. count() is the total number of bytes accepted.
class ByteSink {
 public:
  virtual ~ByteSink() = default;

  void write(std::string_view bytes) {
    do_write(bytes);
    count_ += bytes.size();
  }
  std::size_t count() const noexcept { return count_; }

 protected:
  virtual void do_write(std::string_view bytes) = 0;

 private:
  std::size_t count_ = 0;
};

class StringSink final : public ByteSink {
 public:
  const std::string& str() const noexcept { return buffer_; }
  void clear() { buffer_.clear(); }

 protected:
  void do_write(std::string_view bytes) override { buffer_.append(bytes); }

 private:
  std::string buffer_;
};

class StreamSink final : public ByteSink {
 public:
  explicit StreamSink(std::ostream& out) : out_(&out) {}

 protected:
  void do_write(std::string_view bytes) override;

 private:
  std::ostream* out_;
};

/// Sink bound to standard output.
ByteSink& standard_output();

/// Readable byte stream with one byte of lookahead. Consumed bytes are never
/// delivered again.
class ByteSource {
 public:
  static constexpr int kEnd = -1;

  virtual ~ByteSource() = default;

  /// Next byte (0..255) without consuming it, or kEnd.
  virtual int peek() = 0;
  /// Consumes and returns the next byte, or kEnd.
  virtual int get() = 0;
};

class StringSource final : public ByteSource {
 public:
  explicit StringSource(std::string data) : data_(std::move(data)) {}

  int peek() override;
  int get() override;
  std::size_t position() const noexcept { return pos_; }
  std::string_view remaining() const noexcept { return std::string_view{data_}.substr(pos_); }

 private:
  std::string data_;
  std::size_t pos_ = 0;
};

class StreamSource final : public ByteSource {
 public:
  explicit StreamSource(std::istream& in) : in_(&in) {}

  int peek() override;
  int get() override;

 private:
  std::istream* in_;
};

/// Source bound to standard input.
ByteSource& standard_input();

}  // namespace saferc
