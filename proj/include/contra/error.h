// Copyright 2026 The Contra Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONTRA_ERROR_H_
#define CONTRA_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace contra {

// Base of every error raised by the engine. Data and domain errors derive
// from it directly; ConfigError marks usage problems (missing files, bad
// flags) so callers can tell the two apart.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class MalformedRecord : public Error {
 public:
  MalformedRecord(std::size_t line, std::string reason)
      : Error("line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(std::move(reason)) {}
  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

class DuplicateId : public Error {
 public:
  DuplicateId(std::size_t line, const std::string& id)
      : Error("line " + std::to_string(line) + ": duplicate pair id '" + id +
              "'"),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class EmptyFile : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

class MissingLexiconFile : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class MalformedLexiconLine : public Error {
 public:
  MalformedLexiconLine(const std::string& file, std::size_t line,
                       const std::string& reason)
      : Error(file + ":" + std::to_string(line) + ": " + reason),
        file_(file),
        line_(line) {}
  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class DegenerateDevSet : public Error {
 public:
  using Error::Error;
};

class MalformedModelFile : public Error {
 public:
  using Error::Error;
};

class MalformedMapping : public Error {
 public:
  using Error::Error;
};

class AmbiguousMapping : public Error {
 public:
  using Error::Error;
};

class MalformedRuleBaseFile : public Error {
 public:
  using Error::Error;
};

class VersionMismatch : public Error {
 public:
  using Error::Error;
};

class MissingGoldCategory : public Error {
 public:
  using Error::Error;
};

}  // namespace contra

#endif  // CONTRA_ERROR_H_
