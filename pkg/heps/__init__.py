# Hessian exponent bounds toolkit
