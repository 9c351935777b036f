#ifndef COMGRAPH_VERDICT_HPP
#define COMGRAPH_VERDICT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace comgraph {

// Outcome of a recognizer or structural check. Recognition failures are
// values (reject/unsupported with a reason), never exceptions; exceptions
// are reserved for precondition violations, I/O problems and size limits.
enum class Status { accept, reject, unsupported };

struct Verdict {
    Status status = Status::reject;
    std::string stage;   // which check produced the verdict, "" on accept
    std::string reason;  // human-readable detail, "" on accept

    static Verdict accepted() { return {Status::accept, "", ""}; }
    static Verdict rejected(std::string stage, std::string reason) {
        return {Status::reject, std::move(stage), std::move(reason)};
    }
    static Verdict not_supported(std::string stage, std::string reason) {
        return {Status::unsupported, std::move(stage), std::move(reason)};
    }

    bool accepted_ok() const { return status == Status::accept; }
    explicit operator bool() const { return status == Status::accept; }
};

// Verdict plus a certificate payload; the payload is engaged iff accepted.
template <class T>
struct Outcome {
    Verdict verdict;
    std::optional<T> value;

    static Outcome accept(T v) {
        return Outcome{Verdict::accepted(), std::move(v)};
    }
    static Outcome reject(std::string stage, std::string reason) {
        return Outcome{Verdict::rejected(std::move(stage), std::move(reason)),
                       std::nullopt};
    }
    static Outcome not_supported(std::string stage, std::string reason) {
        return Outcome{
            Verdict::not_supported(std::move(stage), std::move(reason)),
            std::nullopt};
    }

    explicit operator bool() const { return bool(verdict); }
    const T& operator*() const { return *value; }
    T& operator*() { return *value; }
    const T* operator->() const { return &*value; }
};

// Thrown when an operation is asked to exceed its configured size limits
// (clique output caps, isomorphism scale, product sizes, ...).
struct limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace comgraph

#endif
