fn main() {
    afm_cli::init_thread_pool();
    std::process::exit(afm_cli::run(std::env::args_os()));
}
