fn main() {
    let t0 = std::time::Instant::now();
    for w in 1..=3usize {
        let pool = fueter_core::arith::search_gz(4.0, w);
        println!("word {} -> {} elements, {:?}", w, pool.len(), t0.elapsed());
    }
}
