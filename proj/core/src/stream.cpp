#include "saferc/stream.hpp"

#include <iostream>

namespace saferc {

void StreamSink::do_write(std::string_view bytes) {
  out_->write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

ByteSink& standard_output() {
  static StreamSink sink{std::cout};
  return sink;
}

int StringSource::peek() {
  return pos_ < data_.size() ? static_cast<unsigned char>(data_[pos_]) : kEnd;
}

int StringSource::get() {
  return pos_ < data_.size() ? static_cast<unsigned char>(data_[pos_++]) : kEnd;
}

int StreamSource::peek() {
  const auto c = in_->peek();
  return c == std::istream::traits_type::eof() ? kEnd : c;
}

int StreamSource::get() {
  const auto c = in_->get();
  return c == std::istream::traits_type::eof() ? kEnd : c;
}

ByteSource& standard_input() {
  static StreamSource source{std::cin};
  return source;
}

}  // namespace saferc
