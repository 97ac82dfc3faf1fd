use clap::Parser;

fn main() {
    let args = counit_resolve::Args::parse();
    std::process::exit(counit_resolve::run(&args));
}
