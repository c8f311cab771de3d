//! Compile the AES MixColumns layer (a 32×32 GF(2) matrix) onto a 4×8 grid.

use topocnot::arch::builtin_architecture;
use topocnot::pipeline::{aes_mixcolumns, compile_pipeline, CompileInput, CompileOptions};

fn main() -> topocnot::Result<()> {
    let a = aes_mixcolumns();
    let arch = builtin_architecture("grid-4x8")?;
    let opts = CompileOptions::for_architecture(&arch);
    let out = compile_pipeline(&CompileInput::Matrix(a), &arch, &opts)?;
    println!("row additions (chosen):      {}", out.stats.decomposition_length);
    println!("row additions (shortest):    {}", out.stats.shortest_decomposition);
    println!("routed CNOTs on grid-4x8:    {}", out.stats.gates);
    println!("routed depth:                {}", out.stats.depth);
    println!("compile time:                {:.2?}", out.stats.wall_time);
    Ok(())
}
