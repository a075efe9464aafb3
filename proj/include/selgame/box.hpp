#pragma once

#include <memory>
#include <utility>

namespace selgame {

// Heap cell with value semantics, used to close recursive variants.
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  T& operator*() { return *ptr_; }

  friend bool operator==(const Box& a, const Box& b) { return *a.ptr_ == *b.ptr_; }
  friend bool operator<(const Box& a, const Box& b) { return *a.ptr_ < *b.ptr_; }

 private:
  std::unique_ptr<T> ptr_;
};

}  // namespace selgame
