#ifndef SGSCORE_ERROR_HPP
#define SGSCORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sgscore {

// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Malformed input data. Carries the 1-based line number of the offending
// record (0 when unknown) and a field path such as "tokens[2].head".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string &path, const std::string &msg)
      : Error(format(line, path, msg)), line_(line), path_(path), detail_(msg) {}

  std::size_t line() const { return line_; }
  const std::string &path() const { return path_; }
  const std::string &detail() const { return detail_; }

 private:
  static std::string format(std::size_t line, const std::string &path,
                            const std::string &msg) {
    std::string out = "line " + std::to_string(line);
    if (!path.empty()) out += ": " + path;
    out += ": " + msg;
    return out;
  }

  std::size_t line_;
  std::string path_;
  std::string detail_;
};

// Violation of a structural graph invariant.
class GraphError : public Error {
 public:
  explicit GraphError(const std::string &msg) : Error(msg) {}
};

// A correlation coefficient is undefined for the given data, for example
// when one of the series has zero variance.
class UndefinedCorrelation : public Error {
 public:
  explicit UndefinedCorrelation(const std::string &msg) : Error(msg) {}
};

}  // namespace sgscore

#endif  // SGSCORE_ERROR_HPP
