namespace wres {}
