#include <pthread.h>

#include <iostream>

#include "wf/cli.hpp"

namespace {

// wfrec nests one native frame per recursive call; the default depth budget
// needs more than the usual 8 MB.
constexpr std::size_t kStackBytes = std::size_t{512} << 20;

struct Args {
  int argc;
  char** argv;
  int status;
};

void* run(void* p) {
  auto* args = static_cast<Args*>(p);
  args->status = wf::run_cli(args->argc, args->argv, std::cout, std::cerr);
  return nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  Args args{argc, argv, 1};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, kStackBytes);
  pthread_t thread;
  if (pthread_create(&thread, &attr, run, &args) != 0) {
    run(&args);
  } else {
    pthread_join(thread, nullptr);
  }
  pthread_attr_destroy(&attr);
  return args.status;
}
