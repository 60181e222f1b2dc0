fn main() {
    // die quietly instead of panicking when the consumer closes the pipe
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(arcdeg::cli::run());
}
