#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wex {

// Runs body(i) for i in [0, n) on up to `threads` workers with a strided
// split. The first exception thrown by any worker is rethrown on the caller.
template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
	const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
	if (workers == 1) {
		for (std::size_t i = 0; i < n; ++i) {
			body(i);
		}
		return;
	}
	std::exception_ptr failure;
	std::mutex guard;
	std::vector<std::thread> pool;
	pool.reserve(workers);
	for (unsigned w = 0; w < workers; ++w) {
		pool.emplace_back([&, w] {
			try {
				for (std::size_t i = w; i < n; i += workers) {
					body(i);
				}
			} catch (...) {
				std::lock_guard<std::mutex> lock(guard);
				if (!failure) {
					failure = std::current_exception();
				}
			}
		});
	}
	for (auto& t : pool) {
		t.join();
	}
	if (failure) {
		std::rethrow_exception(failure);
	}
}

} // namespace wex
