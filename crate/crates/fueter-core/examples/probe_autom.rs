fn main() {
    use fueter_core::arith::*;
    use fueter_core::group::QMatrix2;
    use fueter_core::qpoly::QPolynomial;
    use fueter_core::quaternion::Quaternion;
    use fueter_core::rng::Pcg;
    use fueter_core::scalar::Rat;

    type P = QPolynomial<Rat>;
    let mut rng = Pcg::new(42);

    // random inhomogeneous tuple, weight 2
    let mut h: Vec<P> = Vec::new();
    for _ in 0..2 {
        let mut p = P::zero();
        for _ in 0..6 {
            let mut e = [0u16; 4];
            let mut left = 3u16;
            for item in e.iter_mut() {
                let v = rng.below((left + 1) as u64) as u16;
                *item = v;
                left -= v;
            }
            p.insert(e, rng.quaternion(2, 2));
        }
        h.push(p);
    }
    let tilde = symmetrize_diag_units(&h);
    println!("tilde zero? {}", tilde.iter().all(|p| p.is_zero()));
    for u in lipschitz_units() {
        let g = QMatrix2::diag(u.clone(), u.clone());
        let q = rng.ball_point();
        let r = automorphy_residual(&tilde, &g, &q, AutomorphySide::CqPlusD).unwrap();
        println!("unit {:?} law residual {}", u.coords().map(|c| fueter_core::scalar::rat_to_f64(&c)), r);
    }
    // dagger side on the dagger of the tuple
    let dag: Vec<P> = tilde.iter().map(|p| p.dagger()).collect();
    for u in lipschitz_units().into_iter().take(4) {
        let g = QMatrix2::diag(u.clone(), u.clone());
        let q = rng.ball_point();
        let r = automorphy_residual(&dag, &g, &q, AutomorphySide::APlusBQbar).unwrap();
        println!("dagger-side residual {}", r);
        let rd = automorphy_residual(&dag, &g.dagger(), &q, AutomorphySide::APlusBQbar).unwrap();
        println!("dagger-side residual at gamma-dagger {}", rd);
    }
    let _ = Quaternion::<Rat>::one();
}
