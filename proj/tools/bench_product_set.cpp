// Times the class-representative product against the direct double loop on the powers
// of one class, and checks that both agree.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "ultralat/genball.hpp"
#include "ultralat/group_table.hpp"

using namespace ultralat;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string name = argc > 1 ? argv[1] : "SL(3,3)";
  const GroupTable t = GroupTable::enumerate(GroupDescriptor::parse(name), 1000000);
  std::size_t h = 0;
  for (std::size_t c = 0; c < t.class_count(); ++c)
    if (!t.is_central(t.class_rep(c))) {
      h = t.class_rep(c);
      break;
    }
  const NormalSet c = class_set(t, h);
  NormalSet p = c;
  std::cout << "group " << name << " order " << t.size() << " classes " << t.class_count() << "\n";
  std::cout << "k,set_size,fast_s,naive_s\n";
  for (std::size_t k = 2; k <= 6 && !p.is_full(); ++k) {
    NormalSet fast(t), slow(t);
    const double tf = seconds([&] { fast = product_set(c, p); });
    const double ts = seconds([&] { slow = product_set_naive(c, p); });
    if (!(fast == slow)) {
      std::cerr << "mismatch at k=" << k << "\n";
      return EXIT_FAILURE;
    }
    std::cout << k << ',' << fast.count() << ',' << tf << ',' << ts << "\n";
    p = fast;
  }
  return EXIT_SUCCESS;
}
