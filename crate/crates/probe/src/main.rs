use faer::sparse::{SparseColMat, Triplet};

fn main() {
    // 2x2 saddle-ish system [[2,1],[1,0]] x = [3,1] -> x = [1,1]
    let triplets = vec![
        Triplet::new(0usize, 0usize, 2.0f64),
        Triplet::new(0, 1, 1.0),
        Triplet::new(1, 0, 1.0),
    ];
    let a = SparseColMat::try_new_from_triplets(2, 2, &triplets).unwrap();
    let lu = a.sp_lu().unwrap();
    let rhs = faer::Mat::from_fn(2, 1, |i, _| if i == 0 { 3.0 } else { 1.0 });
    let x = lu.solve(&rhs);
    println!("x = {:?} {:?}", x[(0, 0)], x[(1, 0)]);
    assert!((x[(0, 0)] - 1.0).abs() < 1e-14 && (x[(1, 0)] - 1.0).abs() < 1e-14);
    println!("faer sparse LU OK");
}
