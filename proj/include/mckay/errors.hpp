#pragma once

#include <stdexcept>
#include <string>

namespace mckay {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct size_mismatch : error {
    explicit size_mismatch(const std::string& what = "size mismatch") : error(what) {}
};

struct no_such_addable_hook : error {
    explicit no_such_addable_hook(const std::string& what = "no addable rim hook with the requested size and leg") : error(what) {}
};

struct invalid_core : error {
    explicit invalid_core(const std::string& what = "partition is not a p-core") : error(what) {}
};

struct equal_hooks : error {
    explicit equal_hooks(const std::string& what = "the two hooks must be distinct") : error(what) {}
};

struct not_hooks : error {
    explicit not_hooks(const std::string& what = "expected hook partitions of a power of 3") : error(what) {}
};

struct not_a_hook : error {
    explicit not_a_hook(const std::string& what = "expected a hook partition") : error(what) {}
};

struct not_three_prime : error {
    explicit not_three_prime(const std::string& what = "input does not have 3'-degree") : error(what) {}
};

struct malformed_label : error {
    explicit malformed_label(const std::string& what = "malformed label") : error(what) {}
};

struct index_mismatch : error {
    explicit index_mismatch(const std::string& what = "class-function tables indexed differently") : error(what) {}
};

struct cap_exceeded : error {
    explicit cap_exceeded(const std::string& what = "group order exceeds the configured cap") : error(what) {}
};

struct unsupported_parameters : error {
    explicit unsupported_parameters(const std::string& what = "unsupported parameters") : error(what) {}
};

struct defining_characteristic : error {
    explicit defining_characteristic(const std::string& what = "3 divides q (defining characteristic)") : error(what) {}
};

struct odd_n : error {
    explicit odd_n(const std::string& what = "n is odd; apply the odd reduction first") : error(what) {}
};

struct even_n : error {
    explicit even_n(const std::string& what = "n is even") : error(what) {}
};

struct unsatisfiable_digits : error {
    explicit unsatisfiable_digits(const std::string& what = "3-adic digit bookkeeping has no witness") : error(what) {}
};

} // namespace mckay
