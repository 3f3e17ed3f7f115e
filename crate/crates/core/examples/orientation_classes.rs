//! Cut-Eulerian classes of orientations. Their number is `T(G;1,1)`.

use tfpoly::orientations::{cut_eulerian_classes, ClassRecord};
use tfpoly::{fixtures, Limits};

fn main() -> tfpoly::Result<()> {
    let g = fixtures::triangle_pendant_loop();
    for cls in cut_eulerian_classes(&g, &Limits::default())? {
        let rec = ClassRecord::from(&cls);
        println!("{}", serde_json::to_string(&rec).unwrap());
    }
    Ok(())
}
